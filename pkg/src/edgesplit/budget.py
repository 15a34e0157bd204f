"""Search budgets counted in backtracking nodes."""

from __future__ import annotations

DEFAULT_BUDGET = 10**7


class BudgetExhausted(Exception):
    pass


class Budget:
    """A shared node counter.  ``limit=None`` means unlimited."""

    def __init__(self, limit: int | None = DEFAULT_BUDGET) -> None:
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(f"node budget {self.limit} exhausted")

    @property
    def remaining(self) -> int | None:
        return None if self.limit is None else max(0, self.limit - self.used)

    def __repr__(self) -> str:
        return f"Budget(used={self.used}, limit={self.limit})"


def as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget if budget is not None else DEFAULT_BUDGET)
