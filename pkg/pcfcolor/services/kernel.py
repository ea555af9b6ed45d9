from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from typing import Optional

from ..exceptions import ContractError
from ..models import Graph, ListAssignment, ListCheck, PcfReport


def unique_colors(graph: Graph, coloring: Mapping[int, int], v: int) -> frozenset[int]:
    """Colors held by exactly one colored neighbor of ``v``; uncolored neighbors are ignored."""
    counts = Counter(coloring[u] for u in graph.neighbors(v) if u in coloring)
    return frozenset(c for c, times in counts.items() if times == 1)


def is_proper(graph: Graph, coloring: Mapping[int, int]) -> frozenset[tuple[int, int]]:
    """Edges whose endpoints are both colored with the same color."""
    return frozenset(
        (u, v)
        for u, v in graph.edges()
        if u in coloring and v in coloring and coloring[u] == coloring[v]
    )


def check_pcf(
    graph: Graph,
    coloring: Mapping[int, int],
    lists: Optional[ListAssignment] = None,
) -> PcfReport:
    missing = [v for v in graph.vertices if v not in coloring]
    if missing:
        raise ContractError(f"coloring is partial; uncolored vertices: {missing}")
    if lists is not None and not lists.covers(graph):
        raise ContractError(f"lists cover {len(lists)} vertices, graph has {graph.n}")

    unique_sets = [sorted(unique_colors(graph, coloring, v)) for v in graph.vertices]
    return PcfReport(
        proper_violations=sorted(is_proper(graph, coloring)),
        cf_failures=[
            v for v in graph.vertices if not graph.is_isolated(v) and not unique_sets[v]
        ],
        list_violations=(
            [v for v in graph.vertices if coloring[v] not in lists[v]] if lists is not None else []
        ),
        unique_sets=unique_sets,
        lists_checked=lists is not None,
    )


def validate_lists(graph: Graph, lists: ListAssignment, k: int) -> ListCheck:
    """Check |L(v)| >= deg(v) + k for every vertex; reports the first failure."""
    if len(lists) != graph.n:
        cover = f"lists cover {len(lists)} vertices, graph has {graph.n}"
        if len(lists) > graph.n:
            return ListCheck(ok=False, reason=cover)
        first = len(lists)
        return ListCheck(ok=False, vertex=first, required=graph.degree(first) + k, reason=cover)
    for v in graph.vertices:
        need = graph.degree(v) + k
        if len(lists[v]) < need:
            return ListCheck(
                ok=False,
                vertex=v,
                required=need,
                reason=f"vertex {v} has {len(lists[v])} colors, needs {need}",
            )
    return ListCheck(ok=True)
