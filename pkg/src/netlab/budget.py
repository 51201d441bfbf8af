"""Cooperative run budgets (wall clock and unit counters) for long loops."""

from __future__ import annotations

import math
import time

__all__ = ["Budget"]


class Budget:
    """Tracks elapsed wall time and consumed work units against limits.

    Long-running operations call :meth:`charge` / :meth:`exceeded` at safe
    points so partial counters survive a timeout instead of being killed.
    """

    def __init__(self, seconds: float | None = None, max_units: int | None = None):
        self.deadline = time.monotonic() + seconds if seconds is not None else math.inf
        self.max_units = max_units if max_units is not None else None
        self.units = 0

    def charge(self, units: int = 1) -> None:
        self.units += units

    def exceeded(self) -> bool:
        if self.max_units is not None and self.units > self.max_units:
            return True
        return time.monotonic() > self.deadline
