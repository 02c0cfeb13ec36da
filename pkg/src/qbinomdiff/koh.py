"""Integer partitions and the KOH decomposition of q-binomial coefficients.

koh_decompose(a, k) splits [a+k choose k]_q into one summand per partition of
k (Zeilberger's algebraic form of O'Hara's unimodality argument); each nonzero
summand is nonnegative, unimodal and symmetric about degree a*k/2.  For k = 3
the decomposition can be iterated until it collapses into a closed sum of
two-factor products, from which the flat degrees of [m choose 3]_q are read
off exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .poly import ONE, ZERO, IntPoly
from .qbinom import qbinomial


def partitions(k: int) -> list:
    """All partitions of k, each as a weakly decreasing tuple of positive ints.

    Reverse-lexicographic order, largest part first: (3,), (2, 1), (1, 1, 1).
    The order is fixed so reports and golden files are deterministic.
    """
    if k < 1:
        raise ValueError("k must be positive")
    out: list = []
    prefix: list = []

    def extend(remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(remaining - part, part)
            prefix.pop()

    extend(k, k)
    return out


def partial_sums(parts: Sequence[int], upto: Optional[int] = None) -> tuple:
    """Cumulative sums Y with Y[0] = 0 and Y[i] = parts[0] + ... + parts[i-1].

    Indices past the last part repeat the full sum, so Y can be read at any
    index up to `upto` (defaults to len(parts)).
    """
    if upto is None:
        upto = len(parts)
    sums = [0]
    for part in parts:
        sums.append(sums[-1] + part)
    while len(sums) <= upto:
        sums.append(sums[-1])
    return tuple(sums[: upto + 1])


def _validate_partition(lam: Sequence[int], k: int) -> tuple:
    lam = tuple(lam)
    if not lam or any(p <= 0 for p in lam):
        raise ValueError("partition parts must be positive")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    if sum(lam) != k:
        raise ValueError(f"partition {lam} does not sum to {k}")
    return lam


@dataclass(frozen=True)
class KohTerm:
    """One summand of a KOH decomposition.

    `exponent` is the power-of-q prefactor 2 * sum(C(part, 2)); `factors`
    lists the (top, bottom) parameters of the q-binomial product, one pair per
    part position; `poly` is the fully assembled summand, prefactor included.
    """

    partition: tuple
    exponent: int
    factors: tuple
    poly: IntPoly

    def to_json_dict(self) -> dict:
        return {
            "partition": list(self.partition),
            "exponent": self.exponent,
            "factors": [{"top": top, "bottom": bottom} for top, bottom in self.factors],
            "poly": self.poly.to_decimal_strings(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "KohTerm":
        return cls(
            partition=tuple(data["partition"]),
            exponent=data["exponent"],
            factors=tuple((f["top"], f["bottom"]) for f in data["factors"]),
            poly=IntPoly.from_decimal_strings(data["poly"]),
        )


def koh_term(a: int, k: int, lam: Sequence[int]) -> KohTerm:
    """The summand contributed by the partition `lam` of k, for parameters (a, k).

    Factor j (1-based, j up to the number of parts) is the q-binomial with
    top j*(a+2) - Y[j-1] - Y[j+1] and bottom lam[j-1] - lam[j], where Y are
    the clamped partial sums and parts past the end count as zero.  Factors
    with bottom 0 and nonnegative top equal 1; any factor outside the
    q-binomial support makes the whole summand zero.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    lam = _validate_partition(lam, k)
    n_parts = len(lam)
    y = partial_sums(lam, upto=n_parts + 1)
    exponent = 2 * sum(comb(part, 2) for part in lam)
    factors = []
    for j in range(1, n_parts + 1):
        top = j * (a + 2) - y[j - 1] - y[j + 1]
        bottom = lam[j - 1] - (lam[j] if j < n_parts else 0)
        factors.append((top, bottom))
    product = ONE
    for top, bottom in factors:
        if bottom == 0 and top >= 0:
            continue
        factor = qbinomial(top, bottom)
        if factor.is_zero():
            product = ZERO
            break
        product = product * factor
    return KohTerm(lam, exponent, tuple(factors), product.shift(exponent))


def koh_decompose(a: int, k: int) -> list:
    """One KohTerm per partition of k; the summand polys add up to [a+k choose k]_q."""
    return [koh_term(a, k, lam) for lam in partitions(k)]


@dataclass(frozen=True)
class K3Summand:
    """One product term of the fully iterated k = 3 decomposition."""

    iteration: int
    exponent: int
    factors: tuple
    poly: IntPoly


def k3_iterated(m: int) -> tuple:
    """Fully iterated decomposition of [m choose 3]_q.

    Returns (epsilon, summands).  epsilon is 1 exactly when m % 4 == 3, in
    which case a lone q^((3m-9)/2) completes the sum.  Iteration i (for
    0 <= i < m // 4) contributes

        q^(6i+2) [m-4i-4 choose 1]_q [2m-8i-7 choose 1]_q   and
        q^(6i)   [3m-12i-8 choose 1]_q.

    Adding every summand poly (plus the epsilon monomial) gives back
    [m choose 3]_q exactly.
    """
    if m < 3:
        raise ValueError("m must be at least 3")
    epsilon = 1 if m % 4 == 3 else 0
    summands = []
    for i in range(m // 4):
        pair = ((m - 4 * i - 4, 1), (2 * m - 8 * i - 7, 1))
        poly = (qbinomial(*pair[0]) * qbinomial(*pair[1])).shift(6 * i + 2)
        summands.append(K3Summand(i, 6 * i + 2, pair, poly))
        single = ((3 * m - 12 * i - 8, 1),)
        summands.append(K3Summand(i, 6 * i, single, qbinomial(*single[0]).shift(6 * i)))
    return epsilon, summands


def k3_assembled(m: int) -> IntPoly:
    """Sum of all k3_iterated(m) summands, epsilon monomial included."""
    epsilon, summands = k3_iterated(m)
    total = ZERO
    for summand in summands:
        total = total + summand.poly
    if epsilon:
        total = total + IntPoly.monomial((3 * m - 9) // 2)
    return total


def k3_flat_degrees(m: int) -> set:
    """Degrees j in [2, middle] where [m choose 3]_q is flat from j-1 to j."""
    if m < 5:
        raise ValueError("m must be at least 5")
    p = qbinomial(m, 3)
    upper = (3 * (m - 3)) // 2
    return {j for j in range(2, upper + 1) if p.coeff(j) == p.coeff(j - 1)}


def k3_predicted_flat_degrees(m: int) -> set:
    """The set k3_flat_degrees(m) must equal, determined by m mod 4.

    {(3m-10)/2} for even m; {(3m-9)/2, (3m-13)/2} for m = 1 (mod 4);
    {(3m-11)/2} for m = 3 (mod 4); intersected with the checked range.
    """
    if m < 5:
        raise ValueError("m must be at least 5")
    if m % 2 == 0:
        predicted = {(3 * m - 10) // 2}
    elif m % 4 == 1:
        predicted = {(3 * m - 9) // 2, (3 * m - 13) // 2}
    else:
        predicted = {(3 * m - 11) // 2}
    upper = (3 * (m - 3)) // 2
    return {j for j in predicted if 2 <= j <= upper}
