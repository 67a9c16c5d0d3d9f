"""Exceptions and the node-expansion counter shared by the search engines."""

from __future__ import annotations

from dataclasses import dataclass


class StarbError(Exception):
    pass


class PreconditionError(StarbError, ValueError):
    """A closed formula was asked about a vertex outside its hypotheses."""


class OracleTooLarge(StarbError):
    """The brute-force oracle refuses instances above its size cap."""


class BudgetExhausted(StarbError):
    """A search ran out of node expansions.

    ``lower`` and ``upper`` carry whatever bounds were verified before the
    budget ran out (``None`` when nothing is known).
    """

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


@dataclass
class SearchStats:
    """Node-expansion counter with an optional hard budget."""

    nodes: int = 0
    prunes: int = 0
    budget: int | None = None

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(f"node budget {self.budget} exhausted")
