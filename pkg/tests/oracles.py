"""Independent reference implementations used to cross-check the library.

These deliberately avoid the closed-form formulas under test: products
are normal-ordered by literal symbol rewriting, and roof chains are
rebuilt by sweeping explicit support functionals.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from weylkit.weyl import WeylElement

Word = Tuple[str, ...]
Terms = Dict[Tuple[int, int], Fraction]


@lru_cache(maxsize=None)
def _normal_order(word: Word) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    """Normal order a p/q symbol string using only q p = p q - 1."""
    for k in range(len(word) - 1):
        if word[k] == "q" and word[k + 1] == "p":
            swapped = _normal_order(word[:k] + ("p", "q") + word[k + 2:])
            dropped = _normal_order(word[:k] + word[k + 2:])
            acc: Dict[Tuple[int, int], int] = dict(swapped)
            for exp, c in dropped:
                acc[exp] = acc.get(exp, 0) - c
            return tuple(sorted((e, c) for e, c in acc.items() if c))
    return (((word.count("p"), word.count("q")), 1),)


def rewrite_product(z: WeylElement, w: WeylElement) -> WeylElement:
    """Product of two elements computed by the rewriting oracle."""
    acc: Terms = {}
    for (i1, j1), c1 in z.items():
        for (i2, j2), c2 in w.items():
            word = ("p",) * i1 + ("q",) * j1 + ("p",) * i2 + ("q",) * j2
            for exp, c in _normal_order(word):
                acc[exp] = acc.get(exp, Fraction(0)) + c1 * c2 * c
    return WeylElement(acc)


def swept_roof_points(z: WeylElement) -> Tuple[Tuple[int, int], ...]:
    """Roof vertices recovered by sweeping explicit direction functionals.

    Every vertex of the exposed chain is the unique support maximizer of
    some integer direction (a, b) with a + b > 0; with exponents bounded
    by E the relevant normals have coordinates bounded by the coordinate
    spread, so scanning |a|, |b| <= 2 * spread + 1 finds them all.
    """
    pts = list(z.support())
    if not pts:
        raise ValueError("zero element")
    spread = max(
        max(p[0] for p in pts) - min(p[0] for p in pts),
        max(p[1] for p in pts) - min(p[1] for p in pts),
        1,
    )
    bound = 2 * spread + 1
    exposed = set()
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a + b <= 0:
                continue
            best = max(a * x + b * y for x, y in pts)
            winners = [p for p in pts if a * p[0] + b * p[1] == best]
            if len(winners) == 1:
                exposed.add(winners[0])
    return tuple(sorted(exposed, key=lambda p: p[1] - p[0]))
