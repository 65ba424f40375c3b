"""Closed forms for the staircase counts and the Hilbert-Kunz function.

All binomials use :func:`hkdet.exactcomb.binom`, which vanishes whenever the
upper argument is below the lower one.  The M-type sum depends on this: its
terms with ``j < i`` have negative upper arguments and must contribute 0.
"""
from __future__ import annotations

from hkdet.exactcomb import binom


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _check(m: int, n: int, q: int) -> None:
    if m < 1 or n < 1 or q < 0:
        raise ValueError(f"need m, n >= 1 and q >= 0; got m={m}, n={n}, q={q}")


def nq_col_bounded_closed(m: int, n: int, q: int) -> int:
    """Staircase monomials whose column sums are all below q.

    Also the number of (m+n-1)-tuples of naturals with sum at most n(q-1)
    whose first n entries are below q.
    """
    _check(m, n, q)
    top = m + n - 1
    return sum(
        _sign(n - i) * binom(n, i) * binom(i * q + m - 1, top) for i in range(1, n + 1)
    )


def _mq_sum(m: int, n: int, q: int, j_start: int) -> int:
    top = m + n - 1
    total = 0
    for i in range(1, n + 1):
        bi = binom(n, i)
        for j in range(j_start, m + 1):
            t = binom(j * q - i * q + n - 1, top)
            if t:
                total += _sign(m - j + i - 1) * bi * binom(m, j) * t
    return total


def mq_closed(m: int, n: int, q: int) -> int:
    """Staircase monomials with every row sum below q and some column sum >= q."""
    _check(m, n, q)
    return _mq_sum(m, n, q, 1)


def mq_closed_from_zero(m: int, n: int, q: int) -> int:
    """:func:`mq_closed` with the inner sum started at ``j = 0``.

    The extra terms all vanish; this exists so that can be checked.
    """
    _check(m, n, q)
    return _mq_sum(m, n, q, 0)


def hk_closed(m: int, n: int, q: int) -> int:
    """Length of ``k[X] / (I_2(X) + (x_ij^q))`` for the generic m x n matrix X."""
    return nq_col_bounded_closed(m, n, q) + mq_closed(m, n, q)


def hk_m2_reference(n: int, q: int) -> int:
    """Previously known closed form of the function for two-row matrices.

    Externally sourced (Miller-Swanson); used only as a cross-check target.
    """
    if n < 1 or q < 0:
        raise ValueError(f"need n >= 1 and q >= 0; got n={n}, q={q}")
    return corollary_rhs(n, q) + n * binom(q + n - 1, n + 1)


def corollary_lhs(n: int, q: int) -> int:
    if n < 1 or q < 0:
        raise ValueError(f"need n >= 1 and q >= 0; got n={n}, q={q}")
    return sum(
        _sign(n - i) * binom(n, i) * binom(i * q + 1, n + 1) for i in range(1, n + 1)
    )


def corollary_rhs(n: int, q: int) -> int:
    """``(n q^(n+1) - (n-2) q^n) / 2``; the numerator is always even."""
    if n < 1 or q < 0:
        raise ValueError(f"need n >= 1 and q >= 0; got n={n}, q={q}")
    numerator = n * q ** (n + 1) - (n - 2) * q**n
    if numerator % 2:
        raise AssertionError(f"odd numerator {numerator} at n={n}, q={q}")
    return numerator // 2
