from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..exceptions import InputError
from .coloring import ListAssignment
from .graph import Graph


class Expected(str, Enum):
    COLORABLE = "colorable"
    NOT_COLORABLE = "not_colorable"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph
    lists: ListAssignment
    expected: Expected = Expected.UNKNOWN

    def __post_init__(self) -> None:
        if not self.lists.covers(self.graph):
            raise InputError(f"{self.name}: lists do not cover all {self.graph.n} vertices")
