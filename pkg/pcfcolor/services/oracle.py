"""Exhaustive search: PCF L-colorability, counting, chi_pcf and a list refuter.

Only meant for small graphs. Budgets bound the number of search nodes
(color assignments tried) and, for the refuter, the number of list
assignments examined; running out is reported as a status, never as "no".
"""
from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator, Optional

from ..config import settings
from ..exceptions import BudgetExhausted, ContractError, InputError
from ..models import (
    Coloring,
    Graph,
    ListAssignment,
    RefuteResult,
    RefuteStatus,
    SearchBudget,
    SearchResult,
    SearchStatus,
)
from ..utils.logger import logger
from .graph_core import degeneracy_ordering
from .kernel import check_pcf, unique_colors


class _OutOfBudget(Exception):
    pass


class _Backtracker:
    """Colors vertices in degeneracy order, pruning improper or dead neighborhoods."""

    def __init__(self, graph: Graph, lists: ListAssignment, max_nodes: Optional[int]) -> None:
        if not lists.covers(graph):
            raise InputError(f"lists cover {len(lists)} vertices, graph has {graph.n}")
        self.graph = graph
        self.lists = lists
        self.max_nodes = max_nodes
        self.order = degeneracy_ordering(graph).order
        self.pending = list(graph.degrees)
        self.colors: dict[int, int] = {}
        self.nodes = 0

    def _dead(self, v: int) -> bool:
        # a vertex whose neighbors are all colored can no longer gain a unique color
        for w in (v, *self.graph.neighbors(v)):
            if (
                self.pending[w] == 0
                and not self.graph.is_isolated(w)
                and not unique_colors(self.graph, self.colors, w)
            ):
                return True
        return False

    def run(self, on_leaf: Callable[[], bool]) -> bool:
        """Walk the search tree; ``on_leaf`` returns True to stop at a total coloring."""
        graph, colors, pending = self.graph, self.colors, self.pending

        def descend(i: int) -> bool:
            if i == len(self.order):
                return on_leaf()
            v = self.order[i]
            taken = {colors[u] for u in graph.neighbors(v) if u in colors}
            for c in sorted(self.lists[v] - taken):
                self.nodes += 1
                if self.max_nodes is not None and self.nodes > self.max_nodes:
                    raise _OutOfBudget
                colors[v] = c
                for u in graph.neighbors(v):
                    pending[u] -= 1
                if not self._dead(v) and descend(i + 1):
                    return True
                for u in graph.neighbors(v):
                    pending[u] += 1
                del colors[v]
            return False

        return descend(0)


def _search(graph: Graph, lists: ListAssignment, max_nodes: Optional[int]) -> SearchResult:
    search = _Backtracker(graph, lists, max_nodes)
    found: dict[int, int] = {}

    def keep_first() -> bool:
        found.update(search.colors)
        return True

    try:
        solved = search.run(keep_first)
    except _OutOfBudget:
        return SearchResult(SearchStatus.BUDGET_EXHAUSTED, nodes=search.nodes)
    if not solved:
        return SearchResult(SearchStatus.UNSOLVABLE, nodes=search.nodes)

    coloring = Coloring.from_mapping(graph.n, found)
    if settings.DEBUG_CHECKS:
        report = check_pcf(graph, coloring, lists)
        if not report.valid:
            raise ContractError(f"oracle produced an invalid coloring: {report.render()}")
    return SearchResult(SearchStatus.SOLUTION, coloring=coloring, nodes=search.nodes)


def brute_force_pcf(
    graph: Graph, lists: ListAssignment, budget: Optional[SearchBudget] = None
) -> SearchResult:
    budget = budget or SearchBudget()
    result = _search(graph, lists, budget.max_nodes)
    logger.info(f"oracle on n={graph.n}: {result.status.value} after {result.nodes} nodes")
    return result


def count_pcf_colorings(
    graph: Graph, lists: ListAssignment, budget: Optional[SearchBudget] = None
) -> int:
    """Number of PCF L-colorings. Unbounded unless a budget is passed."""
    search = _Backtracker(graph, lists, budget.max_nodes if budget else None)
    total = 0

    def tally() -> bool:
        nonlocal total
        total += 1
        return False

    try:
        search.run(tally)
    except _OutOfBudget:
        raise BudgetExhausted(
            f"counting stopped after {search.nodes} nodes", nodes=search.nodes
        ) from None
    return total


def pcf_chromatic_number(
    graph: Graph, max_k: int, budget: Optional[SearchBudget] = None
) -> Optional[int]:
    """Least k <= max_k with a PCF coloring from {1..k}; None if there is none."""
    if graph.n == 0:
        return 0
    max_nodes = budget.max_nodes if budget else None
    for k in range(1, max_k + 1):
        result = _search(graph, ListAssignment.uniform(graph.n, range(1, k + 1)), max_nodes)
        if result.status == SearchStatus.BUDGET_EXHAUSTED:
            raise BudgetExhausted(f"search for k={k} ran out of nodes", nodes=result.nodes)
        if result.solved:
            logger.info(f"chi_pcf = {k} for n={graph.n}")
            return k
    return None


def canonical_list_assignments(
    graph: Graph, k: int, universe: int
) -> Iterator[ListAssignment]:
    """List assignments with |L(v)| = deg(v) + k over colors {1..universe}, one per renaming class.

    Colors appear in first-appearance order: scanning vertices by id and each
    list in increasing order, every color not seen before is the next unused
    integer. Assignments are yielded in lexicographic order of their lists.
    """
    sizes = [graph.degree(v) + k for v in graph.vertices]
    if any(size <= 0 for size in sizes):
        raise InputError(f"k={k} leaves some vertex with an empty list")
    if sizes and universe < max(sizes):
        raise InputError(f"universe {universe} is smaller than the largest list size {max(sizes)}")

    chosen: list[frozenset[int]] = []

    def extend(v: int, used: int) -> Iterator[ListAssignment]:
        if v == graph.n:
            yield ListAssignment(lists=tuple(chosen))
            return
        size = sizes[v]
        for combo in combinations(range(1, min(used + size, universe) + 1), size):
            fresh = [c for c in combo if c > used]
            if fresh != list(range(used + 1, used + len(fresh) + 1)):
                continue
            chosen.append(frozenset(combo))
            yield from extend(v + 1, used + len(fresh))
            chosen.pop()

    yield from extend(0, 0)


def refute_choosability(
    graph: Graph, k: int, universe: int, budget: Optional[SearchBudget] = None
) -> RefuteResult:
    """Search for a (degree + k) list assignment with no PCF coloring."""
    budget = budget or SearchBudget()
    checked = 0
    for lists in canonical_list_assignments(graph, k, universe):
        if checked >= budget.max_assignments:
            logger.info(f"refuter stopped after {checked} assignments")
            return RefuteResult(RefuteStatus.BUDGET_EXHAUSTED, assignments_checked=checked)
        checked += 1
        result = _search(graph, lists, budget.max_nodes)
        if result.status == SearchStatus.BUDGET_EXHAUSTED:
            logger.info(f"oracle ran out of nodes on assignment {checked}")
            return RefuteResult(RefuteStatus.BUDGET_EXHAUSTED, assignments_checked=checked)
        if result.status == SearchStatus.UNSOLVABLE:
            logger.info(f"refuter found a witness at assignment {checked}")
            return RefuteResult(RefuteStatus.WITNESS, witness=lists, assignments_checked=checked)
        if checked % 10_000 == 0:
            logger.debug(f"refuter progress: {checked} assignments")
    logger.info(f"refuter exhausted {checked} assignments without a witness")
    return RefuteResult(RefuteStatus.NONE_FOUND, assignments_checked=checked)


def probe_degeneracy_bound(
    graph: Graph, universe: int, budget: Optional[SearchBudget] = None
) -> RefuteResult:
    """Refuter run at k = degeneracy of the graph."""
    d = degeneracy_ordering(graph).d
    logger.info(f"probing (degree + {d}) lists over {universe} colors")
    return refute_choosability(graph, d, universe, budget)
