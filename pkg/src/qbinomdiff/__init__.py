"""Exact arithmetic for q-binomial coefficients and their shifted differences.

Computes Gaussian binomial coefficients, their KOH decompositions into
unimodal symmetric summands, and verdicts (nonnegative? unimodal? symmetric?)
for the shifted differences f(k, m, b), together with scan/report machinery,
the ladder-reduction inequality, and closed-form coefficient oracles.
"""

from .conjecture import (
    CSV_HEADER,
    DEFAULT_THRESHOLDS,
    CheckReport,
    DiffSpec,
    ThresholdTable,
    check,
    ci_closed_form,
    di_closed_form,
    f_poly,
    largest_bs,
    middle_degree_delta,
    one_degree_shift_b,
    predicted_exception,
    reduction_inequality_holds,
    reiner_stanton_correspondence,
    scan,
    twelve_cases,
    valid_bs,
)
from .koh import (
    K3Summand,
    KohTerm,
    k3_assembled,
    k3_flat_degrees,
    k3_iterated,
    k3_predicted_flat_degrees,
    koh_decompose,
    koh_term,
    partial_sums,
    partitions,
)
from .poly import (
    ONE,
    ZERO,
    IntPoly,
    dominates,
    is_nonnegative,
    is_symmetric,
    is_unimodal,
    truncated_first_difference,
)
from .qbinom import QBinomCache, coeff_by_partition_count, default_cache, qbinomial

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "DEFAULT_THRESHOLDS",
    "CheckReport",
    "DiffSpec",
    "IntPoly",
    "K3Summand",
    "KohTerm",
    "ONE",
    "QBinomCache",
    "ThresholdTable",
    "ZERO",
    "check",
    "ci_closed_form",
    "coeff_by_partition_count",
    "default_cache",
    "di_closed_form",
    "dominates",
    "f_poly",
    "is_nonnegative",
    "is_symmetric",
    "is_unimodal",
    "k3_assembled",
    "k3_flat_degrees",
    "k3_iterated",
    "k3_predicted_flat_degrees",
    "koh_decompose",
    "koh_term",
    "largest_bs",
    "middle_degree_delta",
    "one_degree_shift_b",
    "partial_sums",
    "partitions",
    "predicted_exception",
    "qbinomial",
    "reduction_inequality_holds",
    "reiner_stanton_correspondence",
    "scan",
    "truncated_first_difference",
    "twelve_cases",
    "valid_bs",
]
