from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class PcfReport(BaseModel):
    """Checker verdict for one total coloring."""

    proper_violations: List[Tuple[int, int]] = Field(
        default_factory=list, description="Edges (u, v), u < v, whose endpoints share a color"
    )
    cf_failures: List[int] = Field(
        default_factory=list, description="Non-isolated vertices without a uniquely occurring neighbor color"
    )
    list_violations: List[int] = Field(
        default_factory=list, description="Vertices colored outside their list"
    )
    unique_sets: List[List[int]] = Field(
        default_factory=list, description="Per-vertex sorted set of colors seen exactly once among neighbors"
    )
    lists_checked: bool = Field(False, description="Whether list membership was judged")

    @property
    def valid(self) -> bool:
        return not (self.proper_violations or self.cf_failures or self.list_violations)

    def render(self) -> str:
        lines = [f"verdict: {'valid' if self.valid else 'invalid'}"]
        if self.proper_violations:
            lines.append(
                "proper_violations: " + " ".join(f"{u}-{v}" for u, v in self.proper_violations)
            )
        if self.cf_failures:
            lines.append("cf_failures: " + " ".join(map(str, self.cf_failures)))
        if self.list_violations:
            lines.append("list_violations: " + " ".join(map(str, self.list_violations)))
        return "\n".join(lines)


class ListCheck(BaseModel):
    """Outcome of a list-size check: ``ok`` plus the first vertex that fails it."""

    ok: bool = Field(..., description="Whether every list is large enough")
    vertex: Optional[int] = Field(None, description="First offending vertex")
    required: Optional[int] = Field(None, description="Size the offending list needed")
    reason: str = Field("", description="Why the check failed, for error messages")

    def __bool__(self) -> bool:
        return self.ok
