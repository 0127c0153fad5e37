"""Seeded random generators shared by the test modules.

Everything is driven by an explicit random.Random instance so each test
pins its own seed and the suite stays reproducible run to run.
"""

from fractions import Fraction
from random import Random
from typing import Optional

from weylkit.bipoly import BiPoly
from weylkit.transforms import Linear, PairSwap, Rot90, Scale, TriLower, TriUpper, Word
from weylkit.weyl import WeylElement


def rational(rng: Random, num_max: int = 9, den_max: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-num_max, num_max), rng.randint(1, den_max))
        if value or not nonzero:
            return value


def weyl_element(
    rng: Random,
    max_terms: int = 6,
    max_exp: int = 5,
    nonzero: bool = False,
) -> WeylElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        terms[exp] = rational(rng, nonzero=True)
    elem = WeylElement(terms)
    if nonzero and elem.is_zero():
        exp = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        elem = WeylElement({exp: rational(rng, nonzero=True)})
    return elem


def bipoly(rng: Random, max_terms: int = 5, max_exp: int = 4, nonzero: bool = False) -> BiPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = (rng.randint(0, max_exp), rng.randint(0, max_exp))
        terms[exp] = rational(rng, nonzero=True)
    poly = BiPoly(terms)
    if nonzero and poly.is_zero():
        poly = BiPoly({(rng.randint(0, max_exp), rng.randint(0, max_exp)): Fraction(1)})
    return poly


_DIRECTION_POOL = (
    (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (3, 2), (2, 3),
    (2, -1), (-1, 2), (3, -1), (-1, 3), (3, -2), (-2, 3), (4, -1), (-1, 4),
)


def direction(rng: Random) -> tuple[int, int]:
    return rng.choice(_DIRECTION_POOL)


def homogeneous_bipoly(
    rng: Random,
    d: tuple[int, int],
    max_terms: int = 4,
    max_exp: int = 6,
    degree: Optional[int] = None,
) -> BiPoly:
    """Nonzero polynomial supported on a single weighted-degree line."""
    rho, sigma = d
    points = [(i, j) for i in range(max_exp + 1) for j in range(max_exp + 1)]
    by_degree: dict[int, list[tuple[int, int]]] = {}
    for i, j in points:
        by_degree.setdefault(rho * i + sigma * j, []).append((i, j))
    if degree is None:
        degree = rng.choice(sorted(by_degree))
    line = by_degree[degree]
    count = rng.randint(1, min(max_terms, len(line)))
    chosen = rng.sample(line, count)
    return BiPoly({e: rational(rng, nonzero=True) for e in chosen})


def poly_coeffs(rng: Random, max_deg: int, zero_ok: bool = True) -> tuple[Fraction, ...]:
    """Dense coefficient tuple, constant term first, possibly all zero."""
    if zero_ok and rng.random() < 0.15:
        return ()
    deg = rng.randint(0, max_deg)
    coeffs = [rational(rng) for _ in range(deg)] + [rational(rng, nonzero=True)]
    return tuple(coeffs)


def algebra_word(rng: Random, max_len: int = 4, tri_degree_budget: Optional[int] = None) -> Word:
    """Random automorphism word over all five algebra generators.

    tri_degree_budget caps the product of the triangular substitution
    degrees across the word, keeping image degrees small enough for bulk
    exact-arithmetic runs.  None leaves them uncapped.
    """
    budget = tri_degree_budget
    word = []
    for _ in range(rng.randint(1, max_len)):
        kind = rng.randrange(5)
        if kind == 0:
            while True:
                a, b, c = (rational(rng, num_max=3, den_max=2) for _ in range(3))
                if a:
                    break
            # Solve a d - b c = 1 for d so the matrix is unimodular.
            word.append(Linear(a, b, c, (1 + b * c) / a))
        elif kind in (1, 2):
            cap = 3 if budget is None else min(3, budget)
            coeffs = poly_coeffs(rng, cap)
            degree = max(len(coeffs) - 1, 1)
            if budget is not None and degree > 1:
                budget = max(1, budget // degree)
            word.append(TriUpper(coeffs) if kind == 1 else TriLower(coeffs))
        elif kind == 3:
            word.append(Scale(rational(rng, num_max=4, den_max=3, nonzero=True)))
        else:
            word.append(Rot90())
    return tuple(word)


def scaling_word(rng: Random, max_len: int = 6) -> Word:
    """Random word over the pair-symmetry generators Scale, Rot90, PairSwap."""
    word = []
    for _ in range(rng.randint(0, max_len)):
        kind = rng.randrange(3)
        if kind == 0:
            word.append(Scale(rational(rng, num_max=4, den_max=3, nonzero=True)))
        elif kind == 1:
            word.append(Rot90())
        else:
            word.append(PairSwap())
    return tuple(word)
