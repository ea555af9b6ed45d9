from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ..config import settings
from ..exceptions import InputError
from .coloring import Coloring, ListAssignment


class SearchStatus(str, Enum):
    SOLUTION = "solution"
    UNSOLVABLE = "unsolvable"
    BUDGET_EXHAUSTED = "budget_exhausted"


class RefuteStatus(str, Enum):
    WITNESS = "witness"
    NONE_FOUND = "none_found"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = field(default_factory=lambda: settings.ORACLE_MAX_NODES)
    max_assignments: int = field(default_factory=lambda: settings.REFUTE_MAX_ASSIGNMENTS)

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_assignments < 1:
            raise InputError("search budgets must be positive")


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    coloring: Optional[Coloring] = None
    nodes: int = 0

    @property
    def solved(self) -> bool:
        return self.status == SearchStatus.SOLUTION


@dataclass(frozen=True)
class RefuteResult:
    status: RefuteStatus
    witness: Optional[ListAssignment] = None
    assignments_checked: int = 0
