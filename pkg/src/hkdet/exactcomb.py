"""Exact binomial coefficients and bounded-composition counts."""
from __future__ import annotations

import math
from dataclasses import dataclass

from hkdet.budget import Budget


def binom(t: int, b: int) -> int:
    """Combinatorial binomial coefficient.

    Returns 0 whenever ``t < b``, negative ``t`` included, so every term
    counts a (possibly empty) set. This is *not* the polynomial extension
    ``binom(-2, 3) == -4``.
    """
    if b < 0:
        raise ValueError(f"binom: lower argument must be non-negative, got {b}")
    if t < b:
        return 0
    return math.comb(t, b)


@dataclass(frozen=True)
class CompositionSpec:
    """b-tuples of naturals with sum <= w whose first a entries are < z."""

    a: int
    b: int
    w: int
    z: int

    def __post_init__(self) -> None:
        if self.a < 0:
            raise ValueError(f"a must be non-negative, got {self.a}")
        if self.b < 1:
            raise ValueError(f"b must be positive, got {self.b}")
        if self.a > self.b:
            raise ValueError(f"need a <= b, got a={self.a}, b={self.b}")
        if self.z < 1:
            raise ValueError(f"z must be positive, got {self.z}")


def count_bounded_compositions(spec: CompositionSpec) -> int:
    """Inclusion-exclusion count of the tuples described by ``spec``."""
    a, b, w, z = spec.a, spec.b, spec.w, spec.z
    if w < 0:
        return 0
    total = 0
    for i in range(a + 1):
        term = binom(a, i) * binom(w - i * z + b, b)
        total += -term if i % 2 else term
    return total


def count_bounded_compositions_oracle(
    spec: CompositionSpec, work_budget: int | None = None
) -> int:
    """Count the same tuples by walking every one of them.

    The walk visits one node per prefix of a valid tuple, so its cost is at
    most ``b`` times the answer plus the number of dead prefixes; it stops
    with :class:`WorkBudgetExceeded` once ``work_budget`` steps are used.
    """
    a, b, w, z = spec.a, spec.b, spec.w, spec.z
    if w < 0:
        return 0
    budget = Budget(work_budget, what=f"composition enumeration {spec}")
    count = 0
    # stack of (position, remaining sum)
    stack = [(0, w)]
    while stack:
        pos, remaining = stack.pop()
        budget.spend()
        if pos == b:
            count += 1
            continue
        top = remaining if pos >= a else min(remaining, z - 1)
        for v in range(top + 1):
            stack.append((pos + 1, remaining - v))
    return count
