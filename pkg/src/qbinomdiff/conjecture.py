"""Shifted q-binomial differences and their nonnegativity/unimodality checks.

The central object is the symmetric difference

    f(k, m, b) = [m choose k]_q - q^(k(m-b)/2 + b - 2k + 2) [b choose k-2]_q,

defined when k*(m-b) is even and (for k >= 3) k-2 <= b <= (km-4k+4)/(k-2);
both ends then share the center k*(m-k)/2.  predicted_exception() encodes the
parameter sets where the difference is expected to fail nonnegativity or
unimodality, check() compares that prediction against the exact computation,
and scan() sweeps whole parameter ranges.  reduction_inequality_holds(),
largest_bs() and twelve_cases() implement the ladder argument that reduces
each (k, m) to its top few values of b, and ci_closed_form()/di_closed_form()
are the closed-form coefficient oracles for the k = 5 case analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .poly import (
    IntPoly,
    dominates,
    is_nonnegative,
    is_unimodal,
    truncated_first_difference,
)
from .qbinom import qbinomial

# Smallest m, per k, at which the k >= 5 prediction is considered meaningful.
# These are empirical: below them the shifted subtracted term can still outgrow
# the minuend for reasons the exceptional set does not capture.
DEFAULT_THRESHOLDS: Mapping[int, int] = {5: 20, 6: 32, 7: 18, 8: 18, 9: 20, 10: 24}

REASON_NONE = "none"
REASON_BELOW_THRESHOLD = "below-threshold"
REASON_ONE_DEGREE_SHIFT = "one-degree-shift"


class ThresholdTable:
    """Minimal m per k (k >= 5) at which the exceptional-set prediction applies.

    Below the threshold, or for a k with no entry, no prediction is made and
    reports carry the "below-threshold" reason code instead of a disagreement.
    Overrides are merged over the defaults, so the table is data a caller can
    tighten or loosen to probe the true thresholds empirically.
    """

    def __init__(self, overrides: Optional[Mapping[int, int]] = None) -> None:
        table = dict(DEFAULT_THRESHOLDS)
        if overrides:
            table.update(overrides)
        for k, m_min in table.items():
            if k < 5:
                raise ValueError(f"thresholds apply to k >= 5 only, got k={k}")
            if m_min < k:
                raise ValueError(f"threshold for k={k} must be at least k, got {m_min}")
        self._table = table

    def get(self, k: int) -> Optional[int]:
        return self._table.get(k)

    def as_dict(self) -> dict:
        return dict(self._table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThresholdTable):
            return NotImplemented
        return self._table == other._table

    def __repr__(self) -> str:
        return f"ThresholdTable({self._table!r})"


@dataclass(frozen=True)
class DiffSpec:
    """Parameters (k, m, b) of one shifted q-binomial difference.

    The constructor enforces the parity constraint (k*(m-b) even) and, for
    k >= 3, the range k-2 <= b <= (km-4k+4)/(k-2); within it the shift
    exponent is nonnegative and the subtracted term fits inside degree
    k*(m-k).  For k = 2 the difference does not depend on b, which is
    canonicalized to 0.
    """

    k: int
    m: int
    b: int = 0

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.m < self.k:
            raise ValueError("m must be at least k")
        if self.k == 2:
            object.__setattr__(self, "b", 0)
            return
        if (self.k * (self.m - self.b)) % 2 != 0:
            raise ValueError(
                f"parity violated: k*(m-b) = {self.k * (self.m - self.b)} must be even"
            )
        if self.b < self.k - 2:
            raise ValueError(f"range violated: b must be at least k-2 = {self.k - 2}")
        if self.b * (self.k - 2) > self.k * self.m - 4 * self.k + 4:
            raise ValueError("range violated: b exceeds (k*m - 4k + 4)/(k - 2)")

    @property
    def shift_exponent(self) -> int:
        return (self.k * (self.m - self.b)) // 2 + self.b - 2 * self.k + 2

    @property
    def center_twice(self) -> int:
        return self.k * (self.m - self.k)


CSV_HEADER = (
    "k,m,b,shift_exponent,nonnegative,unimodal,first_negative_degree,"
    "first_violation_degree,predicted_exception,agrees"
)


def _json_bool(value: bool) -> str:
    return "true" if value else "false"


@dataclass(frozen=True)
class CheckReport:
    """Verdicts for one DiffSpec, paired with the prediction they are held against."""

    spec: DiffSpec
    nonnegative: bool
    unimodal: bool
    symmetric: bool
    first_negative_degree: Optional[int]
    first_unimodality_violation: Optional[int]
    predicted_exception: bool
    prediction_reason: str
    agrees_with_prediction: bool

    @property
    def passes(self) -> bool:
        return self.nonnegative and self.unimodal

    def to_json_dict(self) -> dict:
        return {
            "k": self.spec.k,
            "m": self.spec.m,
            "b": self.spec.b,
            "shift_exponent": self.spec.shift_exponent,
            "nonnegative": self.nonnegative,
            "unimodal": self.unimodal,
            "symmetric": self.symmetric,
            "first_negative_degree": self.first_negative_degree,
            "first_violation_degree": self.first_unimodality_violation,
            "predicted_exception": self.predicted_exception,
            "prediction_reason": self.prediction_reason,
            "agrees": self.agrees_with_prediction,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CheckReport":
        return cls(
            spec=DiffSpec(data["k"], data["m"], data["b"]),
            nonnegative=data["nonnegative"],
            unimodal=data["unimodal"],
            symmetric=data["symmetric"],
            first_negative_degree=data["first_negative_degree"],
            first_unimodality_violation=data["first_violation_degree"],
            predicted_exception=data["predicted_exception"],
            prediction_reason=data["prediction_reason"],
            agrees_with_prediction=data["agrees"],
        )

    def to_csv_row(self) -> str:
        def cell(value) -> str:
            if value is None:
                return ""
            if isinstance(value, bool):
                return _json_bool(value)
            return str(value)

        return ",".join(
            cell(value)
            for value in (
                self.spec.k,
                self.spec.m,
                self.spec.b,
                self.spec.shift_exponent,
                self.nonnegative,
                self.unimodal,
                self.first_negative_degree,
                self.first_unimodality_violation,
                self.predicted_exception,
                self.agrees_with_prediction,
            )
        )


def f_poly(spec: DiffSpec) -> IntPoly:
    """The exact difference [m choose k]_q - q^shift [b choose k-2]_q."""
    minuend = qbinomial(spec.m, spec.k)
    subtrahend = qbinomial(spec.b, spec.k - 2).shift(spec.shift_exponent)
    return minuend - subtrahend


def valid_bs(k: int, m: int) -> list:
    """All admissible b for (k, m), ascending; [0] for k = 2.

    For odd k the parity constraint k*(m-b) even forces b = m (mod 2); for
    even k every integer in range qualifies.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if m < k:
        raise ValueError("m must be at least k")
    if k == 2:
        return [0]
    upper = (k * m - 4 * k + 4) // (k - 2)
    if k % 2 == 0:
        return list(range(k - 2, upper + 1))
    return [b for b in range(k - 2, upper + 1) if (m - b) % 2 == 0]


def one_degree_shift_b(k: int, m: int) -> Optional[int]:
    """The b putting the subtracted term at degree 1, when that value is integral.

    This is (km - 4k + 2)/(k - 2), an integer exactly when k - 2 divides
    2m - 6.  The difference then starts 1 + 0q + ... and, as soon as its
    degree reaches 2, can never be unimodal.  The returned value may fall
    outside the admissible range for very small m; callers filter.
    """
    if k < 3:
        return None
    numerator = k * m - 4 * k + 2
    if numerator % (k - 2) != 0:
        return None
    return numerator // (k - 2)


def predicted_exception(
    spec: DiffSpec, thresholds: Optional[ThresholdTable] = None
) -> tuple:
    """Whether the difference for `spec` is expected to fail, with a reason code.

    k = 2 fails exactly for odd m.  k = 3 and k = 4 have fully characterized
    exceptional sets.  For k >= 5 only the one-degree-shift b is expected to
    fail, and only from the threshold m onward; below it (or for a k without
    a threshold entry) the code is "below-threshold" and the boolean carries
    no claim.
    """
    if thresholds is None:
        thresholds = ThresholdTable()
    k, m, b = spec.k, spec.m, spec.b
    if k == 2:
        return (True, "m-odd") if m % 2 else (False, REASON_NONE)
    if k == 3:
        if b == 3 * m - 10:
            return True, "b=3m-10"
        if m % 2 == 0 and b == 2:
            return True, "b=2,m-even"
        if m % 4 == 1 and b in (1, 5):
            return True, "b-in-{1,5},m=1-mod-4"
        if m % 4 == 3 and b == 3:
            return True, "b=3,m=3-mod-4"
        return False, REASON_NONE
    if k == 4:
        if m == 5:
            return True, "m=5"
        if b % 2 == 1:
            return True, "b-odd"
        return False, REASON_NONE
    threshold = thresholds.get(k)
    if threshold is None or m < threshold:
        return False, REASON_BELOW_THRESHOLD
    if b == one_degree_shift_b(k, m):
        return True, REASON_ONE_DEGREE_SHIFT
    return False, REASON_NONE


def _symmetric_about(poly: IntPoly, center_twice: int) -> bool:
    # symmetry about the formal center, robust to cancellation at either end
    # (an unshifted subtrahend kills both extreme coefficients at once, which
    # drops the stored degree below center_twice)
    return all(
        poly.coeff(i) == poly.coeff(center_twice - i)
        for i in range(center_twice // 2 + 1)
    )


def check(spec: DiffSpec, thresholds: Optional[ThresholdTable] = None) -> CheckReport:
    """Compute the difference for `spec` and compare it against the prediction.

    The symmetry verdict is taken about the formal center k*(m-k)/2, so a
    difference whose extreme coefficients cancel (including the zero
    difference at the extreme b) still reads as symmetric.  Disagreements are
    reported, never raised: a scan that finds a genuine counterexample must
    complete and say so.
    """
    poly = f_poly(spec)
    symmetric = _symmetric_about(poly, spec.center_twice)
    nonnegative, first_negative = is_nonnegative(poly)
    unimodal, first_violation = is_unimodal(poly)
    predicted, reason = predicted_exception(spec, thresholds)
    passes = nonnegative and unimodal
    if reason == REASON_BELOW_THRESHOLD:
        agrees = True
    else:
        agrees = predicted == (not passes)
    return CheckReport(
        spec=spec,
        nonnegative=nonnegative,
        unimodal=unimodal,
        symmetric=symmetric,
        first_negative_degree=first_negative,
        first_unimodality_violation=first_violation,
        predicted_exception=predicted,
        prediction_reason=reason,
        agrees_with_prediction=agrees,
    )


def scan(
    k: int,
    m_lo: int,
    m_hi: int,
    thresholds: Optional[ThresholdTable] = None,
) -> list:
    """check() every admissible (m, b) with m_lo <= m <= m_hi.

    Deterministic order: m ascending, then b ascending.  m below k is skipped.
    """
    if m_lo > m_hi:
        raise ValueError("m_lo must not exceed m_hi")
    if thresholds is None:
        thresholds = ThresholdTable()
    reports = []
    for m in range(max(k, m_lo), m_hi + 1):
        for b in valid_bs(k, m):
            reports.append(check(DiffSpec(k, m, b), thresholds))
    return reports


def reduction_inequality_holds(k: int, b: int) -> bool:
    """Truncated-difference dominance of [b choose k-2]_q over its shifted shrink.

    Compares the truncated first differences of [b choose k-2]_q and of
    q^((k-2)(k-3)) [b-2k+6 choose k-2]_q up to their shared middle degree
    (k-2)(b-k+2)/2.  This inequality holding for all admissible b is what
    lets a verified (k, m, b) pull (k, m, b-(2k-6)) along with it.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    if b < k - 2:
        raise ValueError("b must be at least k-2")
    if b - 2 * k + 6 < k - 2:
        raise ValueError("b - 2k + 6 must be at least k-2")
    center_twice = (k - 2) * (b - k + 2)
    lhs = truncated_first_difference(qbinomial(b, k - 2), center_twice)
    rhs = truncated_first_difference(
        qbinomial(b - 2 * k + 6, k - 2).shift((k - 2) * (k - 3)), center_twice
    )
    return dominates(lhs, rhs, center_twice // 2).dominates


def largest_bs(k: int, m: int, count: Optional[int] = None) -> list:
    """The largest admissible b values that cover all others via the ladder.

    Stepping b down by 2k - 6 preserves a passing verdict, so the top 2k - 6
    admissible values (k - 3 when k is odd: parity thins the ladder by half)
    cover everything the prediction expects to pass.  The one-degree-shift b
    is excluded before taking the top slice -- it is expected to fail and
    needs no coverage.  Returned largest first.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    if count is None:
        count = k - 3 if k % 2 else 2 * k - 6
    if count < 0:
        raise ValueError("count must be nonnegative")
    candidates = valid_bs(k, m)
    exception = one_degree_shift_b(k, m)
    if exception is not None and exception in candidates:
        candidates.remove(exception)
    top = candidates[-count:] if count else []
    return top[::-1]


def twelve_cases(n: int) -> list:
    """The two top-of-ladder k = 5 differences for each residue m = 6n + j.

    For j = 0..5 these are the pairs largest_bs(5, 6n + j) selects, with shift
    exponents (4,7), (2,5), (0,3), (4,7), (2,5), (0,3) respectively; checking
    the twelve of them checks every admissible b for those m.
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    pairs = [
        (10 * n - 8, 10 * n - 10),
        (10 * n - 5, 10 * n - 7),
        (10 * n - 2, 10 * n - 4),
        (10 * n - 3, 10 * n - 5),
        (10 * n, 10 * n - 2),
        (10 * n + 3, 10 * n + 1),
    ]
    specs = []
    for j, (b_first, b_second) in enumerate(pairs):
        specs.append(DiffSpec(5, 6 * n + j, b_first))
        specs.append(DiffSpec(5, 6 * n + j, b_second))
    return specs


def ci_closed_form(n: int, i: int) -> int:
    """Coefficient i of the truncated difference of q^8 [6n-8 choose 1]_q [12n-14 choose 2]_q.

    Piecewise in i: floor(i/2) - 3 up to 6n - 1, the plateau 3n - 4 up to
    12n - 8, then the descent 15n - 12 - i.  Defined for 8 <= i <= 15n - 13;
    the degrees below 8 are handled separately in the case analysis and are
    out of this oracle's domain.
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    if not 8 <= i <= 15 * n - 13:
        raise ValueError(f"i={i} outside [8, {15 * n - 13}]")
    if i <= 6 * n - 1:
        return i // 2 - 3
    if i <= 12 * n - 8:
        return 3 * n - 4
    return 15 * n - 12 - i


def di_closed_form(n: int, i: int) -> int:
    """Coefficient i of the truncated difference of q^4 [10n-8 choose 3]_q.

    floor((i+2)/6) up to 10n - 7, lowered by 1 when i = 5 (mod 6), then
    ceil((15n-13-i)/3) on the tail.  Defined for 0 <= i <= 15n - 13.
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    if not 0 <= i <= 15 * n - 13:
        raise ValueError(f"i={i} outside [0, {15 * n - 13}]")
    if i <= 10 * n - 7:
        value = (i + 2) // 6
        return value - 1 if i % 6 == 5 else value
    return (15 * n - 13 - i + 2) // 3


def middle_degree_delta(t: int) -> int:
    """Coefficient growth of [12t-1 choose 3]_q from degree 6t-6 to 6t-5.

    This is the middle-degree margin the (4, 1) summand of the KOH
    decomposition supplies in the odd cases of the k = 5 analysis; it must
    come out >= 1.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    p = qbinomial(12 * t - 1, 3)
    return p.coeff(6 * t - 5) - p.coeff(6 * t - 6)


def reiner_stanton_correspondence(k: int, m: int) -> list:
    """The slice b >= m - 4, b = m (mod 4) of admissible parameters, m even.

    This slice is the parameter range of the original Reiner-Stanton
    conjecture; odd m contributes nothing.
    """
    if m % 2:
        return []
    return [
        DiffSpec(k, m, b)
        for b in valid_bs(k, m)
        if b >= m - 4 and (b - m) % 4 == 0
    ]
