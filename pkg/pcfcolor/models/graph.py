from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ..exceptions import InputError


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Build instances with ``services.graph_core.build_graph``; the constructor
    only checks that the adjacency it is handed is simple and symmetric.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(default=-1)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adjacency) != self.n:
            raise InputError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        half_edges = 0
        for v, row in enumerate(self.adjacency):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InputError(f"neighbors of {v} are not sorted and distinct")
            for u in row:
                if u == v:
                    raise InputError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise InputError(f"vertex {u} out of range")
                if v not in self.adjacency[u]:
                    raise InputError(f"edge ({v}, {u}) is not symmetric")
            half_edges += len(row)
        if self.m == -1:
            object.__setattr__(self, "m", half_edges // 2)
        elif self.m != half_edges // 2:
            raise InputError(f"m={self.m} but adjacency holds {half_edges // 2} edges")

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_isolated(self, v: int) -> bool:
        return not self.adjacency[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegeneracyOrdering:
    """A vertex order in which every vertex has at most ``d`` earlier neighbors."""

    order: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(len(self.order))):
            raise InputError("ordering is not a permutation of the vertices")
        if self.d < 0:
            raise InputError("degeneracy must be non-negative")

    @property
    def positions(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)

    def back_degrees(self, graph: Graph) -> tuple[int, ...]:
        pos = self.positions
        return tuple(
            sum(1 for u in graph.neighbors(v) if pos[u] < pos[v]) for v in graph.vertices
        )

    @classmethod
    def from_order(cls, graph: Graph, order: Sequence[int]) -> "DegeneracyOrdering":
        """Wrap a caller-chosen order; ``d`` is its maximum back-degree."""
        if len(order) != graph.n:
            raise InputError(f"ordering has {len(order)} vertices, graph has {graph.n}")
        if sorted(order) != list(graph.vertices):
            raise InputError("ordering is not a permutation of the vertices")
        pos = {v: i for i, v in enumerate(order)}
        d = max(
            (sum(1 for u in graph.neighbors(v) if pos[u] < pos[v]) for v in graph.vertices),
            default=0,
        )
        return cls(order=tuple(order), d=d)
