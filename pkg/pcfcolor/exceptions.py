from __future__ import annotations

from typing import TYPE_CHECKING, Any, Optional

if TYPE_CHECKING:
    from .models import Graph, ListAssignment


class PcfError(Exception):
    """Base class for every error raised by pcfcolor."""


class InputError(PcfError, ValueError):
    """A caller-supplied instance or argument violates a precondition."""


class ParseError(InputError):
    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ContractError(PcfError, RuntimeError):
    """An internal invariant failed; this signals a bug, not bad input."""


class TheoremViolation(ContractError):
    """The tree solver found no legal move on a valid instance.

    Carries the instance and the reduction trace so the failure can be replayed.
    """

    def __init__(
        self,
        message: str,
        graph: Optional["Graph"] = None,
        lists: Optional["ListAssignment"] = None,
        trace: Any = None,
    ) -> None:
        self.graph = graph
        self.lists = lists
        self.trace = trace
        super().__init__(message)


class BudgetExhausted(PcfError):
    def __init__(self, message: str, nodes: int = 0) -> None:
        self.nodes = nodes
        super().__init__(message)
