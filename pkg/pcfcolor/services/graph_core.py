from __future__ import annotations

import heapq
from typing import Iterable

import networkx as nx

from ..exceptions import InputError
from ..models import DegeneracyOrdering, Graph
from ..utils.logger import logger


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Simple graph on 0..n-1; duplicate edges collapse, self-loops are rejected."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    rows: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}): vertex out of range for n={n}")
        if u == v:
            raise InputError(f"edge ({u}, {v}) is a self-loop")
        rows[u].add(v)
        rows[v].add(u)
    return Graph(n=n, adjacency=tuple(tuple(sorted(row)) for row in rows))


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges())
    return g


def degeneracy_ordering(graph: Graph) -> DegeneracyOrdering:
    """Smallest-last ordering by repeated minimum-degree removal.

    Degree buckets hold min-heaps of vertex ids so the smallest index wins ties;
    stale heap entries are skipped lazily. The removal sequence is reversed, so
    each vertex has at most ``d`` neighbors earlier in ``order``.
    """
    n = graph.n
    degree = list(graph.degrees)
    buckets: list[list[int]] = [[] for _ in range(graph.max_degree + 1)]
    for v in graph.vertices:
        buckets[degree[v]].append(v)
    for bucket in buckets:
        heapq.heapify(bucket)

    removed = [False] * n
    removal: list[int] = []
    d = 0
    current = 0
    while len(removal) < n:
        bucket = buckets[current]
        while bucket and (removed[bucket[0]] or degree[bucket[0]] != current):
            heapq.heappop(bucket)
        if not bucket:
            current += 1
            continue
        v = heapq.heappop(bucket)
        removed[v] = True
        removal.append(v)
        d = max(d, current)
        for u in graph.neighbors(v):
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(buckets[degree[u]], u)
                current = min(current, degree[u])

    logger.debug(f"degeneracy ordering computed: n={n} d={d}")
    return DegeneracyOrdering(order=tuple(reversed(removal)), d=d)


def components(graph: Graph) -> list[list[int]]:
    """Connected components, each sorted, listed by their minimum vertex."""
    parts = [sorted(c) for c in nx.connected_components(to_networkx(graph))]
    return sorted(parts, key=lambda part: part[0])


def is_tree(graph: Graph) -> bool:
    return graph.n >= 1 and graph.m == graph.n - 1 and nx.is_connected(to_networkx(graph))


def is_forest(graph: Graph) -> bool:
    return graph.n == 0 or nx.is_forest(to_networkx(graph))


def delete_vertices(graph: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the surviving vertices, relabeled 0.. in original order.

    Returns the subgraph and the old -> new id mapping of the survivors.
    """
    gone = set(removed)
    for v in gone:
        if not 0 <= v < graph.n:
            raise InputError(f"vertex {v} out of range")
    mapping = {}
    for v in graph.vertices:
        if v not in gone:
            mapping[v] = len(mapping)
    adjacency = tuple(
        tuple(mapping[u] for u in graph.neighbors(v) if u in mapping) for v in mapping
    )
    return Graph(n=len(mapping), adjacency=adjacency), mapping
