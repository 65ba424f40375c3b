"""Work accounting shared by the enumeration oracles."""
from __future__ import annotations

import os

ENV_VAR = "HKDET_WORK_BUDGET"
DEFAULT_WORK_BUDGET = 10**8


class WorkBudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured step budget."""


def default_budget() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_WORK_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}")
    return value


class Budget:
    """Counts elementary enumeration steps and fails loudly past the limit."""

    def __init__(self, limit: int | None = None, what: str = "enumeration"):
        self.limit = default_budget() if limit is None else int(limit)
        if self.limit <= 0:
            raise ValueError("work budget must be positive")
        self.what = what
        self.used = 0

    def spend(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.limit:
            raise WorkBudgetExceeded(
                f"{self.what} exceeded the work budget of {self.limit} steps"
            )
