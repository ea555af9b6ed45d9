from __future__ import annotations

from typing import Optional

from ..config import settings
from ..exceptions import ContractError, InputError
from ..models import Coloring, DegeneracyOrdering, Graph, ListAssignment
from ..utils.logger import logger
from .graph_core import degeneracy_ordering
from .kernel import check_pcf, validate_lists


def earliest_neighbor(graph: Graph, ordering: DegeneracyOrdering, v: int) -> Optional[int]:
    """The neighbor of ``v`` placed first in ``ordering``; None when ``v`` is isolated."""
    pos = ordering.positions
    return min(graph.neighbors(v), key=lambda u: pos[u], default=None)


def greedy_pcf_color(
    graph: Graph,
    lists: ListAssignment,
    ordering: Optional[DegeneracyOrdering] = None,
) -> Coloring:
    """PCF L-coloring of a d-degenerate graph from lists of size >= degree + d + 1.

    Vertices are colored along the ordering with the smallest list color that
    avoids every colored neighbor and, for every neighbor u, the color of u's
    earliest neighbor once that one is colored. The earliest neighbor's color
    then stays unique around every vertex.
    """
    if ordering is None:
        ordering = degeneracy_ordering(graph)
    elif len(ordering.order) != graph.n:
        raise InputError(f"ordering covers {len(ordering.order)} vertices, graph has {graph.n}")
    else:
        back = max(ordering.back_degrees(graph), default=0)
        if back > ordering.d:
            raise InputError(f"ordering has back-degree {back} but claims d={ordering.d}")

    check = validate_lists(graph, lists, ordering.d + 1)
    if not check:
        logger.warning(f"greedy precondition failed: {check.reason}")
        raise InputError(f"greedy needs |L(v)| >= deg(v) + {ordering.d + 1}; {check.reason}")

    pos = ordering.positions
    earliest = [min(graph.neighbors(v), key=pos.__getitem__, default=None) for v in graph.vertices]
    colors: dict[int, int] = {}
    for v in ordering.order:
        forbidden = {colors[u] for u in graph.neighbors(v) if u in colors}
        for u in graph.neighbors(v):
            e = earliest[u]
            if e is not None and e != v and e in colors:
                forbidden.add(colors[e])
        if settings.DEBUG_CHECKS:
            if len(forbidden) > ordering.d + graph.degree(v):
                raise ContractError(
                    f"forbidden set of size {len(forbidden)} at vertex {v} exceeds d + deg(v)"
                )
        free = sorted(lists[v] - forbidden)
        if not free:
            raise ContractError(f"no available color at vertex {v}; forbidden={sorted(forbidden)}")
        colors[v] = free[0]

    coloring = Coloring.from_mapping(graph.n, colors)
    if settings.DEBUG_CHECKS:
        report = check_pcf(graph, coloring, lists)
        if not report.valid:
            raise ContractError(f"greedy produced an invalid coloring: {report.render()}")
    logger.debug(f"greedy coloring done: n={graph.n} d={ordering.d}")
    return coloring


def greedy_witnesses(
    graph: Graph, ordering: DegeneracyOrdering, coloring: Coloring
) -> dict[int, int]:
    """Color of each non-isolated vertex's earliest neighbor."""
    return {
        v: coloring[e]
        for v in graph.vertices
        if (e := earliest_neighbor(graph, ordering, v)) is not None
    }
