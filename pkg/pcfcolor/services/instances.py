"""Fixed non-colorable gadgets and seeded random instances.

All randomness comes from ``random.Random(seed)`` (Mersenne Twister), so a
seed reproduces the same instance on every run and platform.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx

from ..exceptions import InputError
from ..models import Expected, Graph, Instance, ListAssignment
from .graph_core import build_graph


def gen_star(n: int) -> Instance:
    """K_{1,n-1}: center 0 with list {2..n}, every leaf with list {1}."""
    if n < 3:
        raise InputError(f"star gadget needs n >= 3, got {n}")
    graph = build_graph(n, ((0, leaf) for leaf in range(1, n)))
    lists = ListAssignment.from_lists([range(2, n + 1)] + [[1]] * (n - 1))
    return Instance(name=f"star-{n}", graph=graph, lists=lists, expected=Expected.NOT_COLORABLE)


def gen_flower(n: int) -> Instance:
    """n four-cycles hub-a-b-c-hub sharing the hub 0.

    Copy i (1-based) uses vertices 3i-2, 3i-1, 3i with list {1, 2i, 2i+1};
    the hub gets {1..2n+1}.
    """
    if n < 1:
        raise InputError(f"flower gadget needs n >= 1, got {n}")
    edges = []
    lists: list[list[int]] = [list(range(1, 2 * n + 2))]
    for i in range(1, n + 1):
        a, b, c = 3 * i - 2, 3 * i - 1, 3 * i
        edges += [(0, a), (a, b), (b, c), (c, 0)]
        lists += [[1, 2 * i, 2 * i + 1]] * 3
    return Instance(
        name=f"flower-{n}",
        graph=build_graph(3 * n + 1, edges),
        lists=ListAssignment.from_lists(lists),
        expected=Expected.NOT_COLORABLE,
    )


def gen_c5_uniform() -> Instance:
    graph = build_graph(5, ((i, (i + 1) % 5) for i in range(5)))
    return Instance(
        name="c5-uniform",
        graph=graph,
        lists=ListAssignment.uniform(5, range(1, 5)),
        expected=Expected.NOT_COLORABLE,
    )


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree decoded from a seeded Pruefer sequence."""
    if n < 1:
        raise InputError(f"tree needs n >= 1, got {n}")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return build_graph(n, nx.from_prufer_sequence(sequence).edges())


def random_degenerate(n: int, d: int, seed: int) -> Graph:
    """Each vertex v > 0 joins between 1 and min(d, v) distinct earlier vertices."""
    if n < 1 or d < 1:
        raise InputError(f"need n >= 1 and d >= 1, got n={n} d={d}")
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        for u in rng.sample(range(v), rng.randint(1, min(d, v))):
            edges.append((u, v))
    return build_graph(n, edges)


def random_list_assignment(graph: Graph, k: int, universe: int, seed: int) -> ListAssignment:
    """Uniform (deg(v) + k)-subsets of {1..universe}."""
    sizes = [graph.degree(v) + k for v in graph.vertices]
    if any(size < 1 for size in sizes):
        raise InputError(f"k={k} leaves some vertex with an empty list")
    if sizes and universe < max(sizes):
        raise InputError(f"universe {universe} is smaller than the largest list size {max(sizes)}")
    rng = random.Random(seed)
    population = range(1, universe + 1)
    return ListAssignment.from_lists(rng.sample(population, size) for size in sizes)


# ---------------------------------------------------------------------------
# adversarial trees


@dataclass
class _Gadget:
    """A subtree in local ids and local colors; ``anchor`` is joined to the hub.

    An ``ordered`` gadget keeps the relative order of its colors when it is
    placed in its block; otherwise the block is shuffled.
    """

    lists: list[frozenset[int]]
    edges: list[tuple[int, int]]
    anchor: int = 0
    ordered: bool = False


def _spider(
    center: set[int], doubles: list[tuple[set[int], set[int]]], singles: list[set[int]]
) -> _Gadget:
    # center first, then each K2 leg as x, y, then the K1 legs
    lists = [frozenset(center)]
    edges = []
    for x, y in doubles:
        xi = len(lists)
        lists += [frozenset(x), frozenset(y)]
        edges += [(0, xi), (xi, xi + 1)]
    for x in singles:
        edges.append((0, len(lists)))
        lists.append(frozenset(x))
    return _Gadget(lists, edges)


def _chained_spider(
    center: set[int],
    doubles: list[tuple[set[int], set[int]]],
    singles: list[set[int]],
    x0: set[int],
    anchor: set[int],
) -> _Gadget:
    """Spider whose center reaches the hub through x0 and a degree-2 anchor.

    Once the spider is gone x0 is a leaf with a color outside the anchor's
    list, so an R1 move gives x0 the smallest such color.
    """
    gadget = _spider(center, doubles, singles)
    x = len(gadget.lists)
    gadget.lists += [frozenset(x0), frozenset(anchor)]
    gadget.edges += [(0, x), (x, x + 1)]
    return _Gadget(gadget.lists, gadget.edges, anchor=x + 1, ordered=True)


def _random_legs(
    rng: random.Random, k: int, ell: int, palette: list[int]
) -> tuple[list[tuple[set[int], set[int]]], list[set[int]]]:
    doubles = []
    for _ in range(ell):
        x = rng.sample(palette, 3)
        doubles.append((set(x), set(rng.sample(x, 2))))
    singles = [set(rng.sample(palette, 2)) for _ in range(k - ell)]
    return doubles, singles


def _disjoint_legs(k: int, ell: int) -> tuple[list[tuple[set[int], set[int]]], list[set[int]]]:
    doubles = [({3 * i + 1, 3 * i + 2, 3 * i + 3}, {3 * i + 1, 3 * i + 2}) for i in range(ell)]
    base = 3 * ell
    singles = [{base + 2 * j + 1, base + 2 * j + 2} for j in range(k - ell)]
    return doubles, singles


def _leg_union(doubles: list[tuple[set[int], set[int]]], singles: list[set[int]]) -> set[int]:
    return set().union(*(x for x, _ in doubles), *singles)


def _gadget_case1(rng: random.Random) -> _Gadget:
    ell = rng.randint(0, 2)
    if ell == 2 and rng.random() < 0.5:
        # both legs lose the same color to their leaf
        return _spider({1, 2, 6, 7}, [({1, 2, 3}, {2, 3}), ({1, 4, 5}, {4, 5})], [])
    palette = list(range(1, 8))
    doubles, singles = _random_legs(rng, 2, ell, palette)
    return _spider(set(rng.sample(palette, 4)), doubles, singles)


def _gadget_case23(rng: random.Random, missing: int) -> _Gadget:
    k = rng.randint(3, 5)
    palette = list(range(1, k + 5))
    doubles, singles = _random_legs(rng, k, k - missing, palette)
    return _spider(set(rng.sample(palette, k + 2)), doubles, singles)


def _gadget_case4(rng: random.Random) -> _Gadget:
    k = rng.randint(3, 5)
    palette = list(range(1, k + 4))
    doubles, singles = _random_legs(rng, k, rng.randint(0, k - 2), palette)
    covered = sorted(_leg_union(doubles, singles))
    center = set(rng.sample(covered, min(k, len(covered))))
    fresh = len(palette) + 1
    while len(center) < k + 2:
        center.add(fresh)
        fresh += 1
    return _spider(center, doubles, singles)


def _gadget_case5(rng: random.Random) -> _Gadget:
    k = rng.randint(3, 5)
    ell = rng.randint(0, k - 2)
    doubles, singles = _random_legs(rng, k, ell, list(range(1, 2 * k + 2)))
    covered = sorted(_leg_union(doubles, singles))
    if len(covered) < k + 1:
        doubles, singles = _disjoint_legs(k, ell)
        covered = sorted(_leg_union(doubles, singles))
    private = 1 if len(covered) == k + 1 else rng.randint(0, 1)
    center = set(rng.sample(covered, k + 2 - private))
    if private:
        center.add(max(covered) + 1)
    return _spider(center, doubles, singles)


def _gadget_case5_dense(rng: random.Random) -> _Gadget:
    # every pendant color sits on exactly two lists (k=4) or at least two (k=5)
    if rng.random() < 0.5:
        return _spider(
            set(range(1, 7)),
            [({1, 2, 3}, {2, 3}), ({1, 4, 5}, {4, 5})],
            [{2, 4}, {3, 5}],
        )
    return _spider(
        set(range(1, 8)),
        [({1, 2, 3}, {2, 3}), ({4, 5, 6}, {5, 6}), ({1, 2, 4}, {1, 4})],
        [{3, 5}, {1, 6}],
    )


def _gadget_case1_second_leads(rng: random.Random) -> _Gadget:
    # x0 takes color 1, which is also the private color of the first leg
    return _chained_spider(
        {1, 2, 3, 4}, [({1, 2, 3}, {2, 3}), ({4, 5, 6}, {5, 6})], [], {1, 9, 10}, {11, 12, 13}
    )


def _gadget_case23_all_alpha(rng: random.Random, missing: int) -> _Gadget:
    # every neighbor of v0 colored before the free legs gets the color of x0
    if missing == 0:
        doubles = [({1, 2, 3}, {2, 3}), ({1, 4, 5}, {4, 5}), ({1, 2, 4}, {2, 4})]
        singles = []
    else:
        doubles = [({1, 2, 3}, {2, 3}), ({1, 2, 3}, {2, 3})]
        singles = [{1, 4}]
    return _chained_spider(set(range(1, 6)), doubles, singles, {1, 9, 10}, {11, 12, 13})


def _gadget_case4_fallback(rng: random.Random) -> _Gadget:
    # both private colors of v0 are taken: 7 withheld from x0, 8 on x0, 7 on the anchor
    return _chained_spider(
        {1, 2, 3, 7, 8}, [], [{1, 2}, {2, 3}, {1, 3}], {7, 8, 10}, {7, 11, 12}
    )


def _gadget_broom_r1(rng: random.Random) -> _Gadget:
    a = [1, 2, 3]
    return _Gadget([frozenset(a), frozenset({rng.choice(a), 4})], [(0, 1)])


def _gadget_broom_r2(rng: random.Random) -> _Gadget:
    b = [4, 5, 6]
    return _Gadget(
        [frozenset({1, 2, 3}), frozenset(b), frozenset(rng.sample(b, 2))], [(0, 1), (1, 2)]
    )


_GADGETS = {
    "case1": _gadget_case1,
    "case1_second_leads": _gadget_case1_second_leads,
    "case2": lambda rng: _gadget_case23(rng, 0),
    "case2_all_alpha": lambda rng: _gadget_case23_all_alpha(rng, 0),
    "case3": lambda rng: _gadget_case23(rng, 1),
    "case3_all_alpha": lambda rng: _gadget_case23_all_alpha(rng, 1),
    "case4": _gadget_case4,
    "case4_fallback": _gadget_case4_fallback,
    "case5": _gadget_case5,
    "case5_dense": _gadget_case5_dense,
    "broom_r1": _gadget_broom_r1,
    "broom_r2": _gadget_broom_r2,
}


def adversarial_tree(seed: int, gadgets: Optional[int] = None) -> Instance:
    """Hub tree whose branches are spiders and brooms shaped for each reduction.

    Every gadget gets its own block of colors, shuffled unless the gadget is
    ordered, and leaf lists nest inside their parent's list so no unintended
    R1 fires. The hub is the highest id and holds deg + 1 colors of its own.
    """
    rng = random.Random(seed)
    count = gadgets if gadgets is not None else rng.randint(4, 8)
    if count < 1:
        raise InputError(f"need at least one gadget, got {count}")
    kinds = sorted(_GADGETS)

    lists: list[frozenset[int]] = []
    edges: list[tuple[int, int]] = []
    anchors: list[int] = []
    next_color = 1
    for _ in range(count):
        gadget = _GADGETS[rng.choice(kinds)](rng)
        offset = len(lists)
        width = max(max(colors) for colors in gadget.lists)
        block: Sequence[int] = range(next_color, next_color + width)
        if not gadget.ordered:
            block = rng.sample(block, width)
        next_color += width
        lists += [frozenset(block[c - 1] for c in colors) for colors in gadget.lists]
        edges += [(offset + u, offset + v) for u, v in gadget.edges]
        anchors.append(offset + gadget.anchor)

    hub = len(lists)
    edges += [(hub, a) for a in anchors]
    lists.append(frozenset(range(next_color, next_color + count + 1)))
    return Instance(
        name=f"adversarial-{seed}",
        graph=build_graph(hub + 1, edges),
        lists=ListAssignment(lists=tuple(lists)),
        expected=Expected.COLORABLE,
    )
