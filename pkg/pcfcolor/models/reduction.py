from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class ReductionKind(str, Enum):
    BASE = "base"
    BASE3 = "base3"
    R1 = "r1"
    R2 = "r2"
    V0 = "v0"


class CaseTag(str, Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    CASE4 = "case4"
    CASE5 = "case5"


@dataclass(frozen=True)
class V0Config:
    """A vertex v0 of degree >= 3 with k pendant legs and one remaining part T0.

    ``pendants`` lists x_1..x_k: the K2 legs first (``companions[i]`` is the
    leaf y hanging from ``pendants[i]`` for i < ell), then the K1 legs.
    ``part`` holds the vertices of T0, the component of T - v0 containing x0.
    """

    v0: int
    x0: int
    pendants: tuple[int, ...]
    companions: tuple[int, ...]
    part: tuple[int, ...]
    case_tag: CaseTag

    @property
    def k(self) -> int:
        return len(self.pendants)

    @property
    def ell(self) -> int:
        return len(self.companions)

    @property
    def removed(self) -> tuple[int, ...]:
        return tuple(sorted((self.v0, *self.pendants, *self.companions)))


@dataclass(frozen=True)
class Reduction:
    kind: ReductionKind
    path: tuple[int, ...] = ()
    alpha: Optional[int] = None
    config: Optional[V0Config] = None

    @property
    def case_tag(self) -> Optional[CaseTag]:
        return self.config.case_tag if self.config else None

    @property
    def removed(self) -> tuple[int, ...]:
        if self.kind == ReductionKind.R1:
            return tuple(sorted(self.path[:2]))
        if self.kind == ReductionKind.R2:
            return tuple(sorted(self.path[:3]))
        if self.kind == ReductionKind.V0 and self.config is not None:
            return self.config.removed
        return ()


@dataclass
class CaseScratch:
    """Colors and index sets read or chosen while extending a v0 configuration."""

    alpha: int
    beta: Optional[int] = None
    gamma: Optional[int] = None
    i_gamma: tuple[int, ...] = ()
    j_gamma: tuple[int, ...] = ()
    branch: str = ""

    def render(self) -> str:
        parts = [f"alpha={self.alpha}", f"beta={self.beta if self.beta is not None else '-'}"]
        if self.gamma is not None:
            parts.append(f"gamma={self.gamma}")
        if self.i_gamma:
            parts.append("I=" + ",".join(map(str, self.i_gamma)))
        if self.j_gamma:
            parts.append("J=" + ",".join(map(str, self.j_gamma)))
        if self.branch:
            parts.append(f"branch={self.branch}")
        return " ".join(parts)


@dataclass
class TraceStep:
    kind: ReductionKind
    case_tag: Optional[CaseTag]
    removed: tuple[int, ...]
    scratch: Optional[CaseScratch] = None

    @property
    def label(self) -> str:
        return self.case_tag.value if self.case_tag else self.kind.value

    def render(self) -> str:
        head = self.kind.value if self.case_tag is None else f"{self.kind.value} {self.case_tag.value}"
        line = f"{head} removed={','.join(map(str, self.removed))}"
        if self.scratch is not None:
            line += " " + self.scratch.render()
        return line


@dataclass
class SolveTrace:
    """Reductions applied by the tree solver, outermost first, in input vertex ids."""

    steps: list[TraceStep] = field(default_factory=list)

    def record(self, step: TraceStep) -> TraceStep:
        self.steps.append(step)
        return step

    def counts(self) -> Counter:
        return Counter(step.label for step in self.steps)

    def render(self) -> str:
        return "\n".join(step.render() for step in self.steps)
