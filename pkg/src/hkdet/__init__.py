"""Generalized Hilbert-Kunz function of the 2x2 determinantal ring, computed exactly.

The closed forms live in :mod:`hkdet.closedforms`; every one of them can be
checked against the brute-force monomial counts in :mod:`hkdet.staircase`.
"""
from hkdet.closedforms import (
    corollary_lhs,
    corollary_rhs,
    hk_closed,
    hk_m2_reference,
    mq_closed,
    mq_closed_from_zero,
    nq_col_bounded_closed,
)
from hkdet.exactcomb import (
    CompositionSpec,
    binom,
    count_bounded_compositions,
    count_bounded_compositions_oracle,
)
from hkdet.polyfit import ExactPolynomial, interpolate_hk, leading_coefficient
from hkdet.staircase import (
    INF,
    CountSpec,
    ExponentMatrix,
    Kind,
    Margins,
    WorkBudgetExceeded,
    count_oracle,
    count_oracle_matrix,
    is_staircase,
    margins_to_matrix,
    matrix_to_margins,
    mirror_count_oracle,
)

__all__ = [
    "INF",
    "CompositionSpec",
    "CountSpec",
    "ExactPolynomial",
    "ExponentMatrix",
    "Kind",
    "Margins",
    "WorkBudgetExceeded",
    "binom",
    "corollary_lhs",
    "corollary_rhs",
    "count_bounded_compositions",
    "count_bounded_compositions_oracle",
    "count_oracle",
    "count_oracle_matrix",
    "hk_closed",
    "hk_m2_reference",
    "interpolate_hk",
    "is_staircase",
    "leading_coefficient",
    "margins_to_matrix",
    "matrix_to_margins",
    "mirror_count_oracle",
    "mq_closed",
    "mq_closed_from_zero",
    "nq_col_bounded_closed",
]

__version__ = "0.1.0"
