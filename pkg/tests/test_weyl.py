from fractions import Fraction
from random import Random

import pytest

from weylkit.bipoly import BiPoly
from weylkit.poisson import poisson_bracket
from weylkit.weyl import (
    BracketCase,
    WeylElement,
    centralizer_counterexamples,
    commutator,
    dixmier_leading_check,
    graded_decomp,
    grade,
    in_D_geq,
    in_D_leq,
    is_weyl_pair,
    leading_form_weyl,
    phi,
    phi_inv,
    shift_identity_check,
    v_deg_weyl,
    weyl_mul,
)

import gen
import oracles

P = WeylElement.gen_p()
Q = WeylElement.gen_q()
ONE = WeylElement.one()


def test_defining_relation():
    assert commutator(P, Q) == ONE
    assert weyl_mul(Q, P) == weyl_mul(P, Q) - ONE


def test_normal_ordering_examples():
    assert weyl_mul(Q, P) == WeylElement({(1, 1): 1, (0, 0): -1})
    # (p + q)^2 = p^2 + 2 p q + q^2 - 1
    s = P + Q
    assert weyl_mul(s, s) == P ** 2 + 2 * weyl_mul(P, Q) + Q ** 2 - ONE
    assert weyl_mul(Q ** 2, P ** 2) == WeylElement(
        {(2, 2): 1, (1, 1): -4, (0, 0): 2}
    )


def test_product_matches_rewrite_oracle():
    rng = Random(606)
    for _ in range(80):
        i, j, s, t = (rng.randint(0, 5) for _ in range(4))
        z = WeylElement({(i, j): 1})
        w = WeylElement({(s, t): 1})
        assert weyl_mul(z, w) == oracles.rewrite_product(z, w)


def test_phi_round_trip():
    rng = Random(707)
    for _ in range(30):
        z = gen.weyl_element(rng)
        assert phi_inv(phi(z)) == z


def test_grading():
    assert grade((2, 5)) == 3
    z = weyl_mul(P, Q) + Q ** 3
    dec = graded_decomp(z)
    assert [k for k, _ in dec.parts] == [3, 0]
    assert sum((part for _, part in dec.parts), WeylElement.zero()) == z
    assert in_D_geq(z, 0) and not in_D_leq(z, 0)
    assert in_D_geq(Q ** 2, 2) and in_D_leq(Q ** 2, 2)


def test_graded_parts_are_ad_pq_eigenvectors():
    rng = Random(808)
    pq = weyl_mul(P, Q)
    for _ in range(20):
        z = gen.weyl_element(rng, nonzero=True)
        for k, part in graded_decomp(z).parts:
            assert commutator(pq, part) == k * part


def test_dixmier_leading_check_cases():
    rep = dixmier_leading_check(P, Q, (1, 1))
    assert rep.product_ok
    assert rep.bracket_case is BracketCase.EQ
    assert rep.poisson_form == BiPoly({(0, 0): 1})
    # Leading forms commute here, so the commutator degree drops strictly.
    rep = dixmier_leading_check(P ** 2, P ** 2 + Q, (1, 1))
    assert rep.bracket_case is BracketCase.STRICT_DROP
    assert rep.bracket_deg < rep.deg_z + rep.deg_w - 2


def test_leading_form_product_law():
    rng = Random(909)
    for _ in range(40):
        z = gen.weyl_element(rng, nonzero=True)
        w = gen.weyl_element(rng, nonzero=True)
        d = gen.direction(rng)
        if d[0] + d[1] <= 0:
            continue
        lhs = leading_form_weyl(weyl_mul(z, w), d)
        assert lhs == leading_form_weyl(z, d) * leading_form_weyl(w, d)


def test_shift_identity_examples():
    assert shift_identity_check([0, 1], 1)
    assert shift_identity_check([2, 0, 3], 4)
    assert shift_identity_check([5], 0)
    with pytest.raises(ValueError):
        shift_identity_check([1, 1], -1)


def test_v_deg_weyl():
    z = P + Q ** 3
    assert v_deg_weyl(z, (0, 1)) == 3
    assert v_deg_weyl(z, (1, 0)) == 1
    assert v_deg_weyl(WeylElement.zero(), (1, 1)) == float("-inf")


def test_is_weyl_pair():
    assert is_weyl_pair(P, Q)
    assert not is_weyl_pair(Q, P)
    assert is_weyl_pair(P + Q, Q)
    assert not is_weyl_pair(P, P)


def test_centralizer_counterexamples():
    # pq commutes with itself and its powers only; the bounded search
    # finds nothing outside those powers.
    assert centralizer_counterexamples(weyl_mul(P, Q), max_exp=4) == []
    assert centralizer_counterexamples(P + Q, max_exp=4) == []
    # p^2 commutes with p, which is not a polynomial in p^2.
    extra = centralizer_counterexamples(P ** 2, max_exp=4)
    assert extra
    for w in extra:
        assert commutator(P ** 2, w).is_zero()
