"""Staircase monomials, the margins bijection, and brute-force counts.

A monomial ``prod x_ij^p_ij`` is stored as its m x n exponent matrix.  It is
*staircase* when no nonzero exponent sits strictly northwest (smaller row
index and smaller column index) of another nonzero exponent, i.e. the
support is a southwest-northeast chain.  Staircase monomials are a k-basis of
``k[X] / (I_2(X) + (x_ij^q))``, so every length here is a monomial count.

Two independent counting routes are provided:

* :func:`count_oracle` walks pairs of margin vectors with equal totals and
  rebuilds each staircase matrix with the southwest corner rule.
* :func:`count_oracle_matrix` fills matrices cell by cell and keeps those that
  pass :func:`is_staircase`.

:func:`mirror_count_oracle` repeats the cell-by-cell count under the
column-mirrored convention (no nonzero strictly northeast of a nonzero).
"""
from __future__ import annotations

import enum
import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, Union

from hkdet.budget import Budget, WorkBudgetExceeded

__all__ = [
    "INF",
    "Bound",
    "CountSpec",
    "ExponentMatrix",
    "Kind",
    "Margins",
    "WorkBudgetExceeded",
    "count_oracle",
    "count_oracle_matrix",
    "is_staircase",
    "is_staircase_mirrored",
    "iter_staircase_matrices",
    "margins_to_matrix",
    "matrix_to_margins",
    "mirror_count_oracle",
]

INF = float("inf")
Bound = Union[int, float]  # a natural number or INF


def _check_bound(value: Bound, name: str) -> Bound:
    if value == INF:
        return INF
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a natural number or INF, got {value!r}")
    return value


@dataclass(frozen=True)
class ExponentMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        if not rows or not rows[0]:
            raise ValueError("exponent matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("exponent matrix rows have unequal lengths")
        if any(v < 0 for row in rows for v in row):
            raise ValueError("exponents must be non-negative")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def zeros(cls, m: int, n: int) -> "ExponentMatrix":
        return cls(tuple((0,) * n for _ in range(m)))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.entries))

    def mirrored(self) -> "ExponentMatrix":
        """Reverse the column order."""
        return ExponentMatrix(tuple(row[::-1] for row in self.entries))


@dataclass(frozen=True)
class Margins:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        cols = tuple(int(c) for c in self.cols)
        if not rows or not cols:
            raise ValueError("margins need at least one row and one column")
        if any(v < 0 for v in rows + cols):
            raise ValueError("margins must be non-negative")
        if sum(rows) != sum(cols):
            raise ValueError(
                f"row total {sum(rows)} differs from column total {sum(cols)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)


class Kind(enum.Enum):
    N_TYPE = "nq"
    M_TYPE = "mq"


@dataclass(frozen=True)
class CountSpec:
    """Parameters of an N_q or M_q monomial count.

    ``N_TYPE``: staircase monomials with row sums <= ``row_bounds``, column
    sums <= ``col_bounds``, and either every row sum < q or every column
    sum < q.

    ``M_TYPE``: staircase monomials with row sums <= min(``row_bounds``, q-1)
    and at least one column sum > its ``col_bounds`` entry.
    """

    m: int
    n: int
    q: int
    row_bounds: tuple[Bound, ...]
    col_bounds: tuple[Bound, ...]
    kind: Kind = Kind.N_TYPE

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 1 or self.q < 0:
            raise ValueError(
                f"need m >= 0, n >= 1, q >= 0; got m={self.m}, n={self.n}, q={self.q}"
            )
        if self.m == 0 and self.kind is not Kind.N_TYPE:
            raise ValueError("m = 0 is only meaningful for N-type counts")
        rows = tuple(_check_bound(b, "row bound") for b in self.row_bounds)
        cols = tuple(_check_bound(b, "column bound") for b in self.col_bounds)
        if len(rows) != self.m or len(cols) != self.n:
            raise ValueError(
                f"expected {self.m} row bounds and {self.n} column bounds, "
                f"got {len(rows)} and {len(cols)}"
            )
        object.__setattr__(self, "row_bounds", rows)
        object.__setattr__(self, "col_bounds", cols)

    @classmethod
    def uniform(
        cls, m: int, n: int, q: int, row: Bound = INF, col: Bound = INF,
        kind: Kind = Kind.N_TYPE,
    ) -> "CountSpec":
        return cls(m, n, q, (row,) * m, (col,) * n, kind)

    def mirrored(self) -> "CountSpec":
        return CountSpec(
            self.m, self.n, self.q, self.row_bounds, self.col_bounds[::-1], self.kind
        )


def is_staircase(mat: ExponentMatrix) -> bool:
    """True iff no nonzero exponent lies strictly northwest of a nonzero one."""
    support = [(i, j) for i, row in enumerate(mat.entries) for j, v in enumerate(row) if v]
    return not any(i2 < i and j2 < j for i, j in support for i2, j2 in support)


def is_staircase_mirrored(mat: ExponentMatrix) -> bool:
    """True iff no nonzero exponent lies strictly northeast of a nonzero one."""
    support = [(i, j) for i, row in enumerate(mat.entries) for j, v in enumerate(row) if v]
    return not any(i2 < i and j2 > j for i, j in support for i2, j2 in support)


def matrix_to_margins(mat: ExponentMatrix) -> Margins:
    return Margins(mat.row_sums(), mat.col_sums())


def _corner_rule(rows, cols, p) -> None:
    """Fill the zeroed m x n table ``p`` in place; ``rows``/``cols`` are consumed.

    Plain indexing only, so it also runs on numpy arrays.
    """
    i, j = len(rows) - 1, 0
    while i >= 0 and j < len(cols):
        v = min(rows[i], cols[j])
        p[i][j] = v
        rows[i] -= v
        cols[j] -= v
        # an exhausted column is dropped first, even when the row is exhausted too
        if cols[j] == 0:
            j += 1
        else:
            i -= 1


def margins_to_matrix(margins: Margins) -> ExponentMatrix:
    """The unique staircase matrix with the given row and column sums.

    Southwest corner rule: the bottom-left free cell receives
    ``min(column remainder, row remainder)``, then the exhausted column
    (moving east) or row (moving north) is dropped.
    """
    m, n = len(margins.rows), len(margins.cols)
    p = [[0] * n for _ in range(m)]
    _corner_rule(list(margins.rows), list(margins.cols), p)
    return ExponentMatrix(tuple(tuple(r) for r in p))


# -- counting ---------------------------------------------------------------


def _trivial_count(spec: CountSpec) -> int | None:
    if spec.m == 0:
        return 1
    if spec.q == 0:
        return 0
    return None


def _margin_caps(spec: CountSpec) -> tuple[list[int], list[int]]:
    """Finite caps on each row and column sum implied by the spec."""
    q, m, n = spec.q, spec.m, spec.n
    if spec.kind is Kind.N_TYPE:
        # every row < q bounds the total by m(q-1); every column < q by n(q-1)
        row_cap = n * (q - 1)
        col_cap = m * (q - 1)
        rows = [int(min(b, max(row_cap, q - 1))) for b in spec.row_bounds]
        cols = [int(min(b, max(col_cap, q - 1))) for b in spec.col_bounds]
    else:
        rows = [int(min(b, q - 1)) for b in spec.row_bounds]
        total_cap = sum(rows)
        cols = [total_cap] * n
    return rows, cols


def _satisfies(spec: CountSpec, rows: Sequence[int], cols: Sequence[int]) -> bool:
    q = spec.q
    if spec.kind is Kind.N_TYPE:
        if any(r > b for r, b in zip(rows, spec.row_bounds)):
            return False
        if any(c > b for c, b in zip(cols, spec.col_bounds)):
            return False
        return all(r < q for r in rows) or all(c < q for c in cols)
    if any(r > min(b, q - 1) for r, b in zip(rows, spec.row_bounds)):
        return False
    return any(c > b for c, b in zip(cols, spec.col_bounds))


def _vectors_by_total(caps: Sequence[int], budget: Budget) -> dict[int, list[tuple[int, ...]]]:
    groups: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for vec in itertools.product(*(range(c + 1) for c in caps)):
        budget.spend()
        groups[sum(vec)].append(vec)
    return groups


def iter_staircase_matrices(
    spec: CountSpec, work_budget: int | None = None
) -> Iterator[ExponentMatrix]:
    """Every staircase matrix counted by ``spec``, generated from its margins."""
    if _trivial_count(spec) is not None:
        return
    budget = Budget(work_budget, what=f"margin enumeration for {spec}")
    row_caps, col_caps = _margin_caps(spec)
    if min(row_caps) < 0 or min(col_caps) < 0:
        return
    row_groups = _vectors_by_total(row_caps, budget)
    col_groups = _vectors_by_total(col_caps, budget)
    for total in sorted(row_groups):
        for rows in row_groups[total]:
            for cols in col_groups.get(total, ()):
                budget.spend()
                mat = margins_to_matrix(Margins(rows, cols))
                if _satisfies(spec, mat.row_sums(), mat.col_sums()):
                    yield mat


def count_oracle(spec: CountSpec, work_budget: int | None = None) -> int:
    """Brute-force N_q / M_q count through the margins bijection."""
    trivial = _trivial_count(spec)
    if trivial is not None:
        return trivial
    return sum(1 for _ in iter_staircase_matrices(spec, work_budget))


def _count_by_cells(
    spec: CountSpec,
    work_budget: int | None,
    predicate: Callable[[ExponentMatrix], bool],
    northwest: bool,
) -> int:
    trivial = _trivial_count(spec)
    if trivial is not None:
        return trivial
    m, n, q = spec.m, spec.n, spec.q
    budget = Budget(work_budget, what=f"matrix enumeration for {spec}")
    row_caps, col_caps = _margin_caps(spec)
    if min(row_caps) < 0:
        return 0
    # any single exponent is at most q-1: it is bounded by its row sum and its
    # column sum, and one of those families is entirely below q
    entry_cap = q - 1
    p = [[0] * n for _ in range(m)]
    rows = [0] * m
    cols = [0] * n
    count = 0

    def blocked(i: int, j: int) -> bool:
        # partial staircase pruning; the leaf check below is authoritative
        for i2 in range(i):
            for j2 in range(n):
                if p[i2][j2] and (j2 < j if northwest else j2 > j):
                    return True
        return False

    def fill(cell: int) -> None:
        nonlocal count
        budget.spend()
        if cell == m * n:
            mat = ExponentMatrix(tuple(tuple(r) for r in p))
            if predicate(mat) and _satisfies(spec, rows, cols):
                count += 1
            return
        i, j = divmod(cell, n)
        top = min(entry_cap, row_caps[i] - rows[i], col_caps[j] - cols[j])
        if top > 0 and blocked(i, j):
            top = 0
        for v in range(top + 1):
            p[i][j] = v
            rows[i] += v
            cols[j] += v
            if spec.kind is Kind.M_TYPE or not (
                any(r >= q for r in rows) and any(c >= q for c in cols)
            ):
                fill(cell + 1)
            rows[i] -= v
            cols[j] -= v
        p[i][j] = 0

    fill(0)
    return count


def count_oracle_matrix(spec: CountSpec, work_budget: int | None = None) -> int:
    """Brute-force N_q / M_q count by filling exponent matrices cell by cell."""
    return _count_by_cells(spec, work_budget, is_staircase, northwest=True)


def mirror_count_oracle(spec: CountSpec, work_budget: int | None = None) -> int:
    """Count under the mirrored staircase convention with reversed column bounds.

    Matches :func:`count_oracle` for every spec; the two conventions differ by
    reversing the column order.
    """
    return _count_by_cells(
        spec.mirrored(), work_budget, is_staircase_mirrored, northwest=False
    )
