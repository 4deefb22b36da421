"""Node-count budgets for the potentially explosive searches.

Every enumeration that can blow up takes an optional node budget.  Running
out raises :class:`BudgetExceededError`; callers that must never return a
wrong boolean catch it and report an inconclusive outcome instead.
"""

from __future__ import annotations

DEFAULT_BUDGET = 5_000_000
DEFAULT_FACTORIZATION_CAP = 200_000


class BudgetExceededError(RuntimeError):
    """A search ran out of its node budget before finishing."""

    def __init__(self, limit: int, used: int):
        super().__init__(f"budget exhausted: {used} nodes used, limit {limit}")
        self.limit = limit
        self.used = used


class CapExceededError(RuntimeError):
    """A materialization (e.g. the factorization set) exceeded its cap."""


class Budget:
    """A spendable node counter.  ``limit=None`` means unlimited."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        if limit is not None and limit < 1:
            raise ValueError("budget limit must be >= 1")
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceededError(self.limit, self.used)

    def exhausted(self) -> bool:
        return self.limit is not None and self.used > self.limit


def as_budget(budget) -> Budget:
    if budget is None or isinstance(budget, Budget):
        return budget if isinstance(budget, Budget) else Budget(None)
    return Budget(int(budget))
