"""Enumeration budget guard for the exhaustive scans.

The default allows up to 2^32 work items (a 2^16 x 2^16 pair enumeration).
Override with the RMQC_ENUM_BUDGET environment variable.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 1 << 32

__all__ = ["BudgetExceeded", "enumeration_budget", "check_budget"]


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured work budget."""


def enumeration_budget() -> int:
    raw = os.environ.get("RMQC_ENUM_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"RMQC_ENUM_BUDGET must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError("RMQC_ENUM_BUDGET must be positive")
    return value


def check_budget(work_items: int, what: str) -> None:
    budget = enumeration_budget()
    if work_items > budget:
        raise BudgetExceeded(
            f"{what} needs {work_items} work items, budget is {budget} "
            "(override with RMQC_ENUM_BUDGET)"
        )
