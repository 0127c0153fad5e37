"""Sparse bivariate polynomials over Q with direction-graded tools.

A polynomial is stored as a map from exponent pairs (i, j) to nonzero
Fraction coefficients, meaning sum of c * X^i * Y^j.  All arithmetic is
exact.  On top of the ring structure this module provides the weighted
degree, leading form and homogeneous decomposition for an integer
direction (rho, sigma), plus exact m-th roots and the maximal power
decomposition f = lam * h^m used by the centralizer machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Optional, Union

NEG_INF = float("-inf")  # degree of the zero polynomial

Exponent = tuple[int, int]
Scalar = Union[Fraction, int, str]


def _fr(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _glex_key(e: Exponent) -> tuple[int, int]:
    # graded lexicographic order with X > Y
    return (e[0] + e[1], e[0])


def _format_terms(terms: Mapping[Exponent, Fraction], sym1: str, sym2: str) -> str:
    """Render a term map deterministically; round-trips through the parser."""
    if not terms:
        return "0"
    parts: list[str] = []
    for (i, j) in sorted(terms, key=_glex_key, reverse=True):
        c = terms[(i, j)]
        mono = []
        if i:
            mono.append(sym1 if i == 1 else f"{sym1}^{i}")
        if j:
            mono.append(sym2 if j == 1 else f"{sym2}^{j}")
        mag = abs(c)
        if mono and mag == 1:
            body = " ".join(mono)
        elif mono:
            body = " ".join([str(mag)] + mono)
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class _SparseTerms:
    """Shared storage and additive structure for exponent->coefficient maps.

    Instances are treated as immutable after construction; the term map is
    canonical (no zero coefficients, exponents are nonnegative ints).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exponent, Scalar], Iterable[tuple[Exponent, Scalar]], None] = None):
        canon: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for (i, j), raw in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term ({i}, {j})")
            c = _fr(raw)
            if c:
                c0 = canon.get((i, j))
                c = c if c0 is None else c0 + c
                if c:
                    canon[(int(i), int(j))] = c
                else:
                    canon.pop((i, j), None)
        self._terms = canon
        self._hash: Optional[int] = None

    # -- queries ---------------------------------------------------------

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def support(self) -> frozenset[Exponent]:
        """Exponent pairs carrying a nonzero coefficient (empty for 0)."""
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_coeff(self) -> Fraction:
        return self.coeff(0, 0)

    def total_degree(self) -> int | float:
        if not self._terms:
            return NEG_INF
        return max(i + j for (i, j) in self._terms)

    def glex_lead(self) -> tuple[Exponent, Fraction]:
        """Leading (exponent, coefficient) in graded-lex order with X > Y."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=_glex_key)
        return e, self._terms[e]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    # -- ring structure shared by both algebras --------------------------

    def _add_terms(self, other: "_SparseTerms", sign: int) -> dict[Exponent, Fraction]:
        out = dict(self._terms)
        for e, c in other._terms.items():
            c2 = out.get(e, Fraction(0)) + sign * c
            if c2:
                out[e] = c2
            else:
                out.pop(e, None)
        return out

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return type(self)(self._add_terms(other, +1))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return type(self)(self._add_terms(other, -1))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return type(self)({e: -c for e, c in self._terms.items()})

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)({(0, 0): other})
        return NotImplemented

    def _scaled(self, c: Fraction):
        if not c:
            return type(self)()
        return type(self)({e: c * v for e, v in self._terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = type(self)({(0, 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


class BiPoly(_SparseTerms):
    """Element of Q[X, Y] with commutative multiplication."""

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(_fr(other))
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                c = out.get(e, Fraction(0)) + c1 * c2
                if c:
                    out[e] = c
                else:
                    out.pop(e, None)
        return BiPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(_fr(other))
        return NotImplemented

    def partial_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): i * c for (i, j), c in self._terms.items() if i})

    def partial_y(self) -> "BiPoly":
        return BiPoly({(i, j - 1): j * c for (i, j), c in self._terms.items() if j})

    def substitute(self, x_image: "BiPoly", y_image: "BiPoly") -> "BiPoly":
        """Evaluate at X = x_image, Y = y_image."""
        powers_x: dict[int, BiPoly] = {0: BiPoly.one()}
        powers_y: dict[int, BiPoly] = {0: BiPoly.one()}

        def pw(cache, base, n):
            if n not in cache:
                cache[n] = pw(cache, base, n - 1) * base
            return cache[n]

        acc = BiPoly()
        for (i, j), c in self._terms.items():
            acc = acc + pw(powers_x, x_image, i) * pw(powers_y, y_image, j) * c
        return acc

    def monic(self) -> "BiPoly":
        """Divide by the graded-lex leading coefficient."""
        _, c = self.glex_lead()
        return self._scaled(1 / c)

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def one() -> "BiPoly":
        return BiPoly({(0, 0): 1})

    @staticmethod
    def constant(c: Scalar) -> "BiPoly":
        return BiPoly({(0, 0): c})

    @staticmethod
    def monomial(i: int, j: int, c: Scalar = 1) -> "BiPoly":
        return BiPoly({(i, j): c})

    @staticmethod
    def var_x() -> "BiPoly":
        return BiPoly({(1, 0): 1})

    @staticmethod
    def var_y() -> "BiPoly":
        return BiPoly({(0, 1): 1})

    def __str__(self) -> str:
        return _format_terms(self._terms, "X", "Y")

    def __repr__(self) -> str:
        return f"BiPoly({self})"


@dataclass(frozen=True)
class Direction:
    """Integer direction (rho, sigma) != (0, 0), normalized to coprime form."""

    rho: int
    sigma: int

    def __post_init__(self):
        if self.rho == 0 and self.sigma == 0:
            raise ValueError("direction (0, 0) is not allowed")
        g = gcd(abs(self.rho), abs(self.sigma))
        if g > 1:
            object.__setattr__(self, "rho", self.rho // g)
            object.__setattr__(self, "sigma", self.sigma // g)

    def value(self, e: Exponent) -> int:
        return self.rho * e[0] + self.sigma * e[1]

    def as_tuple(self) -> tuple[int, int]:
        return (self.rho, self.sigma)

    def __str__(self) -> str:
        return f"({self.rho},{self.sigma})"


DirectionLike = Union[Direction, tuple[int, int]]


def as_direction(d: DirectionLike) -> Direction:
    return d if isinstance(d, Direction) else Direction(*d)


def support(f: _SparseTerms) -> frozenset[Exponent]:
    return f.support()


def v_deg(f: BiPoly, d: DirectionLike) -> int | float:
    """Weighted degree max(rho*i + sigma*j) over the support; NEG_INF for 0."""
    dd = as_direction(d)
    if f.is_zero():
        return NEG_INF
    return max(dd.value(e) for e in f.support())


def leading_form(f: BiPoly, d: DirectionLike) -> BiPoly:
    """Sum of the terms of maximal weighted degree.  Errors on 0."""
    dd = as_direction(d)
    if f.is_zero():
        raise ValueError("leading form of the zero polynomial is undefined")
    top = max(dd.value(e) for e in f.support())
    return BiPoly({e: c for e, c in f.items() if dd.value(e) == top})


@dataclass(frozen=True)
class HomogDecomp:
    """Homogeneous decomposition along a direction, degrees strictly decreasing."""

    direction: Direction
    parts: tuple[tuple[int, BiPoly], ...]

    def total(self) -> BiPoly:
        acc = BiPoly()
        for _, part in self.parts:
            acc = acc + part
        return acc


def homog_decomp(f: BiPoly, d: DirectionLike) -> HomogDecomp:
    dd = as_direction(d)
    if f.is_zero():
        raise ValueError("homogeneous decomposition of the zero polynomial is undefined")
    buckets: dict[int, dict[Exponent, Fraction]] = {}
    for e, c in f.items():
        buckets.setdefault(dd.value(e), {})[e] = c
    parts = tuple((tau, BiPoly(buckets[tau])) for tau in sorted(buckets, reverse=True))
    return HomogDecomp(dd, parts)


def is_homogeneous(f: BiPoly, d: DirectionLike) -> Optional[int]:
    """The degree if f is homogeneous along d, else None.  0 reports degree 0."""
    dd = as_direction(d)
    if f.is_zero():
        return 0
    values = {dd.value(e) for e in f.support()}
    return values.pop() if len(values) == 1 else None


def mth_root(f: BiPoly, m: int) -> Optional[tuple[Fraction, BiPoly]]:
    """Exact decomposition f = lam * h^m with h monic, or None.

    h is built by descending graded-lex induction: each residual's leading
    term pins the next coefficient of h, and the result is verified exactly.
    """
    if f.is_zero():
        raise ValueError("cannot take a root of the zero polynomial")
    if m < 1:
        raise ValueError("root exponent must be >= 1")
    (a, b), lam = f.glex_lead()
    if a % m or b % m:
        return None
    if m == 1:
        return lam, f._scaled(1 / lam)
    target = f._scaled(1 / lam)
    lead = (a // m, b // m)
    h = BiPoly({lead: 1})
    last = lead
    while True:
        residual = target - h ** m
        if residual.is_zero():
            return lam, h
        (ti, tj), rc = residual.glex_lead()
        u = (ti - (m - 1) * lead[0], tj - (m - 1) * lead[1])
        if u[0] < 0 or u[1] < 0 or _glex_key(u) >= _glex_key(last):
            return None
        h = h + BiPoly({u: rc / m})
        last = u


def power_decomposition(f: BiPoly) -> tuple[Fraction, BiPoly, int]:
    """Maximal exact decomposition f = lam * h^m with h monic, m maximal.

    Candidate exponents divide both leading graded-lex exponents and the
    total degree; they are tried in decreasing order so the first success
    is maximal and h itself is not a proper power.
    """
    if f.is_constant():
        raise ValueError("power decomposition requires a nonconstant polynomial")
    (a, b), _ = f.glex_lead()
    bound = gcd(gcd(a, b), int(f.total_degree()))
    for m in sorted((k for k in range(1, bound + 1) if bound % k == 0), reverse=True):
        root = mth_root(f, m)
        if root is not None:
            lam, h = root
            return lam, h, m
    raise AssertionError("unreachable: m = 1 always succeeds")
