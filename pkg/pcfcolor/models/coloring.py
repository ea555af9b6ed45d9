from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from ..exceptions import InputError
from .graph import Graph


def _check_color(c: int) -> None:
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise InputError(f"colors are positive integers, got {c!r}")


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex finite, non-empty sets of allowed colors."""

    lists: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for v, colors in enumerate(self.lists):
            if not colors:
                raise InputError(f"list of vertex {v} is empty")
            for c in colors:
                _check_color(c)

    @classmethod
    def from_lists(cls, lists: Iterable[Iterable[int]]) -> "ListAssignment":
        return cls(lists=tuple(frozenset(colors) for colors in lists))

    @classmethod
    def uniform(cls, n: int, colors: Iterable[int]) -> "ListAssignment":
        palette = frozenset(colors)
        return cls(lists=tuple(palette for _ in range(n)))

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def __len__(self) -> int:
        return len(self.lists)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.lists)

    def covers(self, graph: Graph) -> bool:
        return len(self.lists) == graph.n

    def replace(self, v: int, colors: Iterable[int]) -> "ListAssignment":
        lists = list(self.lists)
        lists[v] = frozenset(colors)
        return ListAssignment(lists=tuple(lists))

    def recolored(self, permutation: Mapping[int, int]) -> "ListAssignment":
        """Rename colors; colors missing from ``permutation`` keep their name."""
        return ListAssignment(
            lists=tuple(frozenset(permutation.get(c, c) for c in colors) for colors in self.lists)
        )


@dataclass(frozen=True)
class Coloring(Mapping[int, int]):
    """Partial vertex -> color mapping over vertices 0..n-1.

    Behaves as a read-only mapping over the colored vertices only.
    """

    n: int
    assignment: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        if len(self.assignment) != self.n:
            raise InputError(f"coloring has {len(self.assignment)} slots for n={self.n}")
        for c in self.assignment:
            if c is not None:
                _check_color(c)

    @classmethod
    def from_mapping(cls, n: int, colors: Mapping[int, int]) -> "Coloring":
        slots: list[Optional[int]] = [None] * n
        for v, c in colors.items():
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range")
            slots[v] = c
        return cls(n=n, assignment=tuple(slots))

    @classmethod
    def from_sequence(cls, colors: Iterable[Optional[int]]) -> "Coloring":
        slots = tuple(colors)
        return cls(n=len(slots), assignment=slots)

    def __getitem__(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n or self.assignment[v] is None:
            raise KeyError(v)
        return self.assignment[v]

    def __iter__(self) -> Iterator[int]:
        return (v for v, c in enumerate(self.assignment) if c is not None)

    def __len__(self) -> int:
        return sum(1 for c in self.assignment if c is not None)

    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def uncolored(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.assignment) if c is None)

    def recolored(self, permutation: Mapping[int, int]) -> "Coloring":
        return Coloring(
            n=self.n,
            assignment=tuple(None if c is None else permutation.get(c, c) for c in self.assignment),
        )
