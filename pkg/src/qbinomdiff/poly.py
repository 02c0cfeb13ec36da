"""Exact dense polynomial arithmetic over Python's arbitrary-precision integers.

Coefficients are stored lowest degree first with no trailing zeros; the zero
polynomial is the empty vector.  Values are immutable, so they can be shared
freely between threads and worker processes.  Alongside the arithmetic, this
module provides the structural predicates (symmetry, unimodality,
nonnegativity), the truncated first difference, and coefficientwise dominance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Optional


class SymmetryCheck(NamedTuple):
    symmetric: bool
    center: Optional[Fraction]


class UnimodalityCheck(NamedTuple):
    unimodal: bool
    violation_index: Optional[int]


class NonnegativityCheck(NamedTuple):
    nonnegative: bool
    first_negative_index: Optional[int]


class DominanceCheck(NamedTuple):
    dominates: bool
    first_failure: Optional[int]


class IntPoly:
    """A dense univariate polynomial with exact integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPoly":
        """coefficient * q**degree."""
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_decimal_strings(cls, items: Iterable) -> "IntPoly":
        """Parse the JSON wire form: coefficients as decimal strings, lowest degree first."""
        return cls(int(item) for item in items)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coeff(self, i: int) -> int:
        """Coefficient of q**i; zero outside the stored range."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def degree(self) -> Optional[int]:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def to_decimal_strings(self) -> list:
        return [str(c) for c in self._coeffs]

    def shift(self, e: int) -> "IntPoly":
        """Multiply by q**e, i.e. prepend e zero coefficients."""
        if e < 0:
            raise ValueError("shift exponent must be nonnegative")
        if e == 0 or self.is_zero():
            return self
        return IntPoly((0,) * e + self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)!r})"

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self._coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, c in enumerate(b):
            out[i] -= c
        return IntPoly(out)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        """Exact schoolbook convolution."""
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)


ZERO = IntPoly()
ONE = IntPoly([1])


def is_symmetric(p: IntPoly) -> SymmetryCheck:
    """Whether coeff(i) == coeff(d - i) for all i, with the center d/2 when true.

    The zero polynomial has no degree to be symmetric about, so it is rejected.
    """
    if p.is_zero():
        raise ValueError("symmetry is undefined for the zero polynomial")
    d = p.degree()
    for i in range(d // 2 + 1):
        if p.coeff(i) != p.coeff(d - i):
            return SymmetryCheck(False, None)
    return SymmetryCheck(True, Fraction(d, 2))


def is_unimodal(p: IntPoly) -> UnimodalityCheck:
    """Whether the coefficients weakly rise to a peak and then weakly fall.

    When they do not, the reported index is the first degree carrying a strict
    rise after an earlier strict fall, i.e. the earliest point at which no
    peak position remains possible.  The zero polynomial and constants are
    unimodal by convention.
    """
    cs = p.coeffs
    fallen = False
    for i in range(1, len(cs)):
        if cs[i] > cs[i - 1]:
            if fallen:
                return UnimodalityCheck(False, i)
        elif cs[i] < cs[i - 1]:
            fallen = True
    return UnimodalityCheck(True, None)


def is_nonnegative(p: IntPoly) -> NonnegativityCheck:
    """Whether every coefficient is >= 0, with the first negative degree when not."""
    for i, c in enumerate(p.coeffs):
        if c < 0:
            return NonnegativityCheck(False, i)
    return NonnegativityCheck(True, None)


def truncated_first_difference(p: IntPoly, center_twice: int) -> IntPoly:
    """First difference of p, kept only up to the middle degree.

    `center_twice` is twice the symmetry center the convention is anchored to
    (for a symmetric polynomial, its degree).  Entry 0 is coeff(0); entry i is
    coeff(i) - coeff(i - 1) for 1 <= i <= center_twice // 2; everything above
    is dropped.  p itself need not be symmetric: the same convention is applied
    to shifted polynomials measured against another center.
    """
    if center_twice < 0:
        raise ValueError("center_twice must be nonnegative")
    top = center_twice // 2
    out = [p.coeff(0)]
    for i in range(1, top + 1):
        out.append(p.coeff(i) - p.coeff(i - 1))
    return IntPoly(out)


def dominates(p: IntPoly, r: IntPoly, upto: int) -> DominanceCheck:
    """Whether coeff_p(i) >= coeff_r(i) for all 0 <= i <= upto."""
    for i in range(upto + 1):
        if p.coeff(i) < r.coeff(i):
            return DominanceCheck(False, i)
    return DominanceCheck(True, None)
