"""Constructive PCF list coloring of trees from (degree + 1)-lists.

The solver peels a tree down by three kinds of moves until at most three
vertices remain, colors that base directly, and then extends the coloring
back outwards one move at a time:

* R1 removes a leaf v1 and its degree-2 neighbor v2 when L(v1) has a color
  missing from L(v2);
* R2 removes a pendant path v1 v2 v3 with degrees (1, 2, 2);
* V0 removes a vertex v0 of degree >= 3 together with its K1/K2 legs,
  leaving one part T0 attached through x0.

Each move may withhold one color from the vertex where the rest of the tree
is attached; the extension step relies on that color being absent there.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable, Optional

from ..config import settings
from ..exceptions import ContractError, InputError, TheoremViolation
from ..models import (
    CaseScratch,
    CaseTag,
    Coloring,
    Graph,
    ListAssignment,
    Reduction,
    ReductionKind,
    SolveTrace,
    TraceStep,
    V0Config,
)
from ..utils.logger import logger
from .graph_core import components, delete_vertices, is_forest, is_tree
from .kernel import check_pcf, unique_colors, validate_lists

_BASE_KINDS = (ReductionKind.BASE, ReductionKind.BASE3)


def normalize_lists(tree: Graph, lists: ListAssignment) -> ListAssignment:
    """Keep the deg(v) + 1 smallest colors of every list."""
    check = validate_lists(tree, lists, 1)
    if not check:
        raise InputError(
            f"lists must have at least deg(v) + 1 colors; {check.reason}"
        )
    return ListAssignment(
        lists=tuple(frozenset(sorted(lists[v])[: tree.degree(v) + 1]) for v in tree.vertices)
    )


# ---------------------------------------------------------------------------
# finding the next move


def _other(tree: Graph, v: int, u: int) -> int:
    """The neighbor of the degree-2 vertex ``v`` that is not ``u``."""
    a, b = tree.neighbors(v)
    return b if a == u else a


def _find_r1(tree: Graph, lists: ListAssignment) -> Optional[Reduction]:
    for v1 in tree.vertices:
        if tree.degree(v1) != 1:
            continue
        v2 = tree.neighbors(v1)[0]
        if tree.degree(v2) != 2:
            continue
        extra = lists[v1] - lists[v2]
        if extra:
            return Reduction(ReductionKind.R1, path=(v1, v2, _other(tree, v2, v1)), alpha=min(extra))
    return None


def _find_r2(tree: Graph, lists: ListAssignment) -> Optional[Reduction]:
    for v1 in tree.vertices:
        if tree.degree(v1) != 1:
            continue
        v2 = tree.neighbors(v1)[0]
        if tree.degree(v2) != 2:
            continue
        v3 = _other(tree, v2, v1)
        if tree.degree(v3) != 2:
            continue
        extra = lists[v2] - lists[v1]
        if extra:
            return Reduction(
                ReductionKind.R2, path=(v1, v2, v3, _other(tree, v3, v2)), alpha=min(extra)
            )
    return None


def _leg(tree: Graph, v0: int, x: int) -> Optional[tuple[int, int, int, Optional[int]]]:
    """Shape of the component of T - v0 through ``x``: (order, min vertex, x, y) for K1/K2."""
    if tree.degree(x) == 1:
        return (1, x, x, None)
    if tree.degree(x) == 2:
        y = _other(tree, x, v0)
        if tree.degree(y) == 1:
            return (2, min(x, y), x, y)
    return None


def _pendant_union(lists: ListAssignment, pendants: Iterable[int]) -> frozenset[int]:
    return frozenset().union(*(lists[x] for x in pendants))


def _case_tag(
    lists: ListAssignment, v0: int, pendants: tuple[int, ...], companions: tuple[int, ...]
) -> CaseTag:
    k, ell = len(pendants), len(companions)
    if k == 2:
        return CaseTag.CASE1
    if ell == k:
        return CaseTag.CASE2
    if ell == k - 1:
        return CaseTag.CASE3
    if len(lists[v0] - _pendant_union(lists, pendants)) >= 2:
        return CaseTag.CASE4
    return CaseTag.CASE5


def _find_v0(tree: Graph, lists: ListAssignment) -> Optional[V0Config]:
    for v0 in tree.vertices:
        if tree.degree(v0) < 3:
            continue
        legs = []
        big = []
        for x in tree.neighbors(v0):
            shape = _leg(tree, v0, x)
            if shape is None:
                big.append(x)
            else:
                legs.append(shape)
        if len(big) > 1:
            continue
        if big:
            x0 = big[0]
        else:
            # every part is a leg: the smallest one plays T0
            chosen = min(legs)
            legs.remove(chosen)
            x0 = chosen[2]
        doubles = sorted((x, y) for order, _, x, y in legs if order == 2)
        singles = sorted(x for order, _, x, _ in legs if order == 1)
        pendants = tuple(x for x, _ in doubles) + tuple(singles)
        companions = tuple(y for _, y in doubles)
        removed = {v0, *pendants, *companions}
        return V0Config(
            v0=v0,
            x0=x0,
            pendants=pendants,
            companions=companions,
            part=tuple(v for v in tree.vertices if v not in removed),
            case_tag=_case_tag(lists, v0, pendants, companions),
        )
    return None


def find_reduction(tree: Graph, lists: ListAssignment) -> Reduction:
    """Next move on a tree with normalized lists.

    Order: base (n <= 2), R1, base P3, R2, v0 configuration.
    """
    if tree.n <= 2:
        return Reduction(ReductionKind.BASE)
    r1 = _find_r1(tree, lists)
    if r1 is not None:
        return r1
    if tree.n == 3:
        return Reduction(ReductionKind.BASE3)
    r2 = _find_r2(tree, lists)
    if r2 is not None:
        return r2
    config = _find_v0(tree, lists)
    if config is not None:
        return Reduction(ReductionKind.V0, config=config)
    raise TheoremViolation("no reduction applies to the tree", graph=tree, lists=lists)


def select_gamma_case5(config: V0Config, lists: ListAssignment) -> tuple[int, tuple[int, ...]]:
    """Pivot color for Case 5 and the (0-based) pendant positions whose lists hold it.

    A color on the fewest pendant lists is taken, smallest first. When every
    color sits on two lists and k = 4, the pivot is drawn from the list of the
    last pendant, which is a K1 leg.
    """
    pendants = config.pendants
    hits = {
        c: tuple(i for i, x in enumerate(pendants) if c in lists[x])
        for c in sorted(_pendant_union(lists, pendants))
    }
    fewest = min(len(where) for where in hits.values())
    pool = sorted(hits)
    if fewest >= 2 and config.k == 4:
        pool = sorted(lists[pendants[-1]])
    gamma = min(c for c in pool if len(hits[c]) == fewest)
    return gamma, hits[gamma]


# ---------------------------------------------------------------------------
# shrinking


@dataclass(frozen=True)
class _Subproblem:
    graph: Graph
    lists: ListAssignment
    mapping: dict[int, int]
    withheld: Optional[int] = None

    def lift(self, coloring: Mapping[int, int]) -> dict[int, int]:
        return {old: coloring[new] for old, new in self.mapping.items()}


def _leg_alpha(lists: ListAssignment, config: V0Config, i: int) -> int:
    return min(lists[config.pendants[i]] - lists[config.companions[i]])


def _v0_withheld(lists: ListAssignment, config: V0Config) -> Optional[int]:
    tag = config.case_tag
    if tag == CaseTag.CASE1 and config.ell == 2:
        first, second = _leg_alpha(lists, config, 0), _leg_alpha(lists, config, 1)
        return first if first == second else None
    if tag == CaseTag.CASE4:
        return min(lists[config.v0] - _pendant_union(lists, config.pendants))
    if tag == CaseTag.CASE5:
        return select_gamma_case5(config, lists)[0]
    return None


def _shrink(tree: Graph, lists: ListAssignment, reduction: Reduction) -> _Subproblem:
    if reduction.kind == ReductionKind.R1:
        attach, withheld = reduction.path[2], reduction.alpha
    elif reduction.kind == ReductionKind.R2:
        attach, withheld = reduction.path[3], reduction.alpha
    else:
        attach, withheld = reduction.config.x0, _v0_withheld(lists, reduction.config)
    graph, mapping = delete_vertices(tree, reduction.removed)
    child = [lists[old] for old in mapping]
    if withheld is not None:
        child[mapping[attach]] = lists[attach] - {withheld}
    return _Subproblem(graph, ListAssignment.from_lists(child), mapping, withheld)


# ---------------------------------------------------------------------------
# extending


class _Extension:
    """Partial coloring of a tree being completed around one move."""

    def __init__(self, tree: Graph, lists: ListAssignment, colors: dict[int, int], label: str) -> None:
        self.tree = tree
        self.lists = lists
        self.colors = colors
        self.label = label

    def fail(self, message: str) -> TheoremViolation:
        return TheoremViolation(f"{self.label}: {message}", graph=self.tree, lists=self.lists)

    def ensure(self, condition: object, message: str) -> None:
        if not condition:
            raise self.fail(message)

    def check(self, condition: object, message: str) -> None:
        if settings.DEBUG_CHECKS and not condition:
            raise self.fail(message)

    def assign(self, v: int, color: int) -> int:
        self.ensure(color in self.lists[v], f"color {color} is not in the list of vertex {v}")
        self.colors[v] = color
        return color

    def pick(self, v: int, avoid: Iterable[Optional[int]] = ()) -> int:
        banned = {c for c in avoid if c is not None}
        free = sorted(self.lists[v] - banned)
        if not free:
            raise self.fail(f"no color left for vertex {v} (avoiding {sorted(banned)})")
        self.colors[v] = free[0]
        return free[0]

    def witness(self, v: int) -> Optional[int]:
        found = unique_colors(self.tree, self.colors, v)
        return min(found) if found else None

    def check_witness(self, v: int, color: int) -> None:
        self.check(
            color in unique_colors(self.tree, self.colors, v),
            f"color {color} does not occur exactly once around vertex {v}",
        )


def _extend_r1(ext: _Extension, reduction: Reduction) -> None:
    v1, v2, v3 = reduction.path
    alpha = reduction.alpha
    beta = ext.colors[v3]
    w = ext.witness(v3)
    ext.ensure(alpha not in ext.lists[v2], "R1 color lies in the list of v2")
    ext.ensure(beta != alpha, "R1 color reappeared on v3")
    ext.assign(v1, alpha)
    ext.pick(v2, (beta, w))


def _extend_r2(ext: _Extension, reduction: Reduction) -> None:
    v1, v2, v3, v4 = reduction.path
    alpha = reduction.alpha
    beta = ext.colors[v4]
    w = ext.witness(v4)
    ext.ensure(beta != alpha, "R2 color reappeared on v4")
    c3 = ext.pick(v3, (beta, w))
    if c3 != alpha:
        ext.assign(v2, alpha)
    else:
        ext.pick(v2, (c3, beta))
    ext.pick(v1, (ext.colors[v2], c3))
    ext.ensure(alpha in (ext.colors[v2], c3), "R2 color is on neither v2 nor v3")


def _color_leg(ext: _Extension, config: V0Config, i: int, c0: int) -> None:
    """Color pendant i after v0 received ``c0``."""
    x = config.pendants[i]
    if i < config.ell:
        y = config.companions[i]
        cy = ext.pick(y, (c0,))
        ext.pick(x, (c0, cy))
    else:
        ext.pick(x, (c0,))


def _case1(ext: _Extension, config: V0Config, scratch: CaseScratch) -> None:
    xs, ys, v0 = config.pendants, config.companions, config.v0
    if config.ell < 2:
        last = xs[-1]
        ext.pick(last, (scratch.alpha,))
        c0 = ext.pick(v0, (scratch.alpha, scratch.beta, ext.colors[last]))
        _color_leg(ext, config, 0, c0)
        scratch.branch = f"ell={config.ell}"
    else:
        alphas = [_leg_alpha(ext.lists, config, i) for i in (0, 1)]
        first = 0 if alphas[0] != scratch.alpha else 1
        second = 1 - first
        ext.ensure(alphas[first] != scratch.alpha, "both leg colors equal the color of x0")
        ext.assign(xs[first], alphas[first])
        c0 = ext.pick(v0, (scratch.alpha, scratch.beta, alphas[first]))
        ext.pick(ys[first], (c0,))
        _color_leg(ext, config, second, c0)
        scratch.gamma = alphas[first]
        scratch.branch = f"ell=2 lead={first + 1}"
    ext.check(unique_colors(ext.tree, ext.colors, v0), "v0 has no unique neighbor color")


def _case23(ext: _Extension, config: V0Config, scratch: CaseScratch) -> None:
    xs, ys, v0 = config.pendants, config.companions, config.v0
    colors, lists = ext.colors, ext.lists
    alpha = scratch.alpha
    legs = range(config.ell)

    candidates = sorted(lists[v0] - {alpha, scratch.beta})
    ext.ensure(candidates, "no candidate color for v0")
    hits = {c: tuple(i for i in legs if c in lists[ys[i]]) for c in candidates}
    gamma = min(candidates, key=lambda c: (len(hits[c]), c))
    bound = 2 if config.case_tag == CaseTag.CASE2 else 1
    ext.check(len(hits[gamma]) <= bound, f"|I_gamma| = {len(hits[gamma])} exceeds {bound}")
    scratch.gamma = gamma
    scratch.i_gamma = tuple(i + 1 for i in hits[gamma])

    ext.assign(v0, gamma)
    for i in hits[gamma]:
        cy = ext.pick(ys[i], (gamma,))
        ext.pick(xs[i], (gamma, cy))
    if config.case_tag == CaseTag.CASE3:
        ext.pick(xs[-1], (gamma,))

    seen = Counter(colors[x] for x in (config.x0, *xs) if x in colors)
    singles = sorted(c for c, times in seen.items() if times == 1)
    rest = [i for i in legs if i not in hits[gamma]]
    if singles:
        scratch.branch = "a"
        witness = singles[0]
        for i in rest:
            ext.pick(xs[i], (gamma, witness))
    else:
        scratch.branch = "b"
        ext.ensure(set(seen) == {alpha}, "colored neighbors of v0 are not all alpha")
        ext.ensure(rest, "no free leg left for the unique color")
        witness = ext.pick(xs[rest[0]], (gamma, alpha))
        for i in rest[1:]:
            ext.pick(xs[i], (gamma, witness))
    for i in rest:
        ext.ensure(gamma not in lists[ys[i]], "pivot color lies in a leaf list outside I_gamma")
        ext.pick(ys[i], (colors[xs[i]],))
    ext.check_witness(v0, witness)


def _case4(ext: _Extension, config: V0Config, scratch: CaseScratch, gamma: int) -> None:
    xs, ys, v0 = config.pendants, config.companions, config.v0
    lists, alpha, beta = ext.lists, scratch.alpha, scratch.beta
    tilde = sorted(lists[v0] - _pendant_union(lists, xs))
    scratch.gamma = gamma
    free = [c for c in tilde if c not in (alpha, beta)]
    if free:
        scratch.branch = "a"
        ext.assign(v0, free[0])
        for x in xs:
            ext.pick(x, (alpha,))
        for i, y in enumerate(ys):
            ext.check(lists[y] <= lists[xs[i]], f"list of {y} is not nested in the list of {xs[i]}")
            ext.pick(y, (ext.colors[xs[i]],))
    else:
        scratch.branch = "b"
        ext.ensure(alpha in tilde and beta == gamma, "Case 4 fallback premise fails")
        c0 = ext.pick(v0, (alpha, beta))
        for i in range(config.k):
            _color_leg(ext, config, i, c0)
    ext.check_witness(v0, alpha)


def _case5(ext: _Extension, config: V0Config, scratch: CaseScratch, gamma: int) -> None:
    xs, ys, v0 = config.pendants, config.companions, config.v0
    lists, ell = ext.lists, config.ell
    hits = tuple(i for i, x in enumerate(xs) if gamma in lists[x])
    ext.check(len(_pendant_union(lists, xs)) >= config.k + 1, "|L(X)| < k + 1")
    ext.check(1 <= len(hits) <= 2, f"|J_gamma| = {len(hits)} is not 1 or 2")
    ext.ensure(scratch.alpha != gamma, "pivot color reappeared on x0")
    scratch.gamma = gamma
    scratch.j_gamma = tuple(i + 1 for i in hits)

    partner: Optional[int] = None
    if len(hits) == 1:
        (pivot,) = hits
        scratch.branch = "single"
    elif config.k == 4:
        leaves = [i for i in hits if i >= ell]
        ext.ensure(leaves, "no K1 leg carries the pivot color")
        pivot = leaves[-1]
        partner = hits[0] if hits[1] == pivot else hits[1]
        scratch.branch = "leaf-pivot"
    else:
        pivot, partner = hits
        scratch.branch = "pair"

    avoid: list[Optional[int]] = [scratch.alpha, scratch.beta, gamma]
    ext.assign(xs[pivot], gamma)
    if pivot < ell:
        avoid.append(ext.pick(ys[pivot], (gamma,)))
    if partner is not None:
        cx = ext.pick(xs[partner], (gamma,))
        avoid.append(cx)
        if partner < ell:
            avoid.append(ext.pick(ys[partner], (cx,)))
    c0 = ext.pick(v0, avoid)
    for i in range(config.k):
        if i not in (pivot, partner):
            _color_leg(ext, config, i, c0)
    ext.check_witness(v0, gamma)


def _extend_v0(ext: _Extension, config: V0Config, sub: _Subproblem) -> CaseScratch:
    scratch = CaseScratch(alpha=ext.colors[config.x0], beta=ext.witness(config.x0))
    for i, y in enumerate(config.companions):
        ext.check(
            ext.lists[y] <= ext.lists[config.pendants[i]],
            f"leaf {y} has colors outside the list of {config.pendants[i]}",
        )
    tag = config.case_tag
    if tag == CaseTag.CASE1:
        _case1(ext, config, scratch)
    elif tag in (CaseTag.CASE2, CaseTag.CASE3):
        _case23(ext, config, scratch)
    elif tag == CaseTag.CASE4:
        _case4(ext, config, scratch, sub.withheld)
    else:
        _case5(ext, config, scratch, sub.withheld)
    return scratch


def _extend(
    tree: Graph,
    lists: ListAssignment,
    reduction: Reduction,
    sub: _Subproblem,
    child: Mapping[int, int],
    step: Optional[TraceStep] = None,
) -> dict[int, int]:
    label = reduction.kind.value if reduction.case_tag is None else reduction.case_tag.value
    ext = _Extension(tree, lists, sub.lift(child), label)
    if reduction.kind == ReductionKind.R1:
        _extend_r1(ext, reduction)
    elif reduction.kind == ReductionKind.R2:
        _extend_r2(ext, reduction)
    else:
        scratch = _extend_v0(ext, reduction.config, sub)
        if step is not None:
            step.scratch = scratch
    return ext.colors


def _color_base(tree: Graph, lists: ListAssignment, reduction: Reduction) -> dict[int, int]:
    ext = _Extension(tree, lists, {}, reduction.kind.value)
    if reduction.kind == ReductionKind.BASE3:
        a, c = (v for v in tree.vertices if tree.degree(v) == 1)
        (b,) = (v for v in tree.vertices if tree.degree(v) == 2)
        ca = ext.pick(a)
        cc = ext.pick(c, (ca,))
        ext.pick(b, (ca, cc))
    else:
        for v in tree.vertices:
            ext.pick(v, ext.colors.values())
    return ext.colors


# ---------------------------------------------------------------------------
# entry points


def _color_tree(
    tree: Graph, lists: ListAssignment, trace: SolveTrace, labels: tuple[int, ...]
) -> dict[int, int]:
    frames = []
    graph, current = tree, lists
    try:
        while True:
            current = normalize_lists(graph, current)
            reduction = find_reduction(graph, current)
            removed = reduction.removed if reduction.kind not in _BASE_KINDS else tuple(graph.vertices)
            step = trace.record(
                TraceStep(
                    kind=reduction.kind,
                    case_tag=reduction.case_tag,
                    removed=tuple(sorted(labels[v] for v in removed)),
                )
            )
            logger.debug(f"tree reduction on n={graph.n}: {step.render()}")
            if reduction.kind in _BASE_KINDS:
                colors = _color_base(graph, current, reduction)
                break
            sub = _shrink(graph, current, reduction)
            frames.append((graph, current, reduction, sub, step))
            graph, current = sub.graph, sub.lists
            labels = tuple(labels[old] for old in sub.mapping)

        for graph, current, reduction, sub, step in reversed(frames):
            colors = _extend(graph, current, reduction, sub, colors, step)
    except TheoremViolation as exc:
        exc.trace = trace
        raise
    return colors


def _require_lists(graph: Graph, lists: ListAssignment) -> None:
    check = validate_lists(graph, lists, 1)
    if not check:
        logger.warning(f"tree lists rejected: {check.reason}")
        raise InputError(
            f"lists must have at least deg(v) + 1 colors; {check.reason}"
        )


def tree_pcf_color(
    tree: Graph, lists: ListAssignment, trace: Optional[SolveTrace] = None
) -> Coloring:
    """PCF L-coloring of a tree whose lists have at least deg(v) + 1 colors."""
    if not is_tree(tree):
        raise InputError("input graph is not a tree")
    _require_lists(tree, lists)
    trace = trace if trace is not None else SolveTrace()
    colors = _color_tree(tree, lists, trace, tuple(tree.vertices))
    coloring = Coloring.from_mapping(tree.n, colors)
    if settings.DEBUG_CHECKS:
        report = check_pcf(tree, coloring, lists)
        if not report.valid:
            raise TheoremViolation(
                f"tree solver produced an invalid coloring: {report.render()}",
                graph=tree,
                lists=lists,
                trace=trace,
            )
    logger.debug(f"tree coloring done: n={tree.n}, {len(trace.steps)} steps")
    return coloring


def forest_pcf_color(
    graph: Graph, lists: ListAssignment, trace: Optional[SolveTrace] = None
) -> Coloring:
    """Componentwise tree coloring; isolated vertices take their smallest color."""
    if not is_forest(graph):
        raise InputError("input graph has a cycle")
    _require_lists(graph, lists)
    trace = trace if trace is not None else SolveTrace()
    colors: dict[int, int] = {}
    for part in components(graph):
        if len(part) == 1:
            colors[part[0]] = min(lists[part[0]])
            continue
        keep = set(part)
        tree, mapping = delete_vertices(graph, (v for v in graph.vertices if v not in keep))
        sub_lists = ListAssignment.from_lists(lists[old] for old in mapping)
        child = _color_tree(tree, sub_lists, trace, tuple(mapping))
        for old, new in mapping.items():
            colors[old] = child[new]
    coloring = Coloring.from_mapping(graph.n, colors)
    if settings.DEBUG_CHECKS:
        report = check_pcf(graph, coloring, lists)
        if not report.valid:
            raise TheoremViolation(
                f"forest solver produced an invalid coloring: {report.render()}",
                graph=graph,
                lists=lists,
                trace=trace,
            )
    return coloring


def _contract(condition: object, message: str) -> None:
    if not condition:
        raise ContractError(message)


def _check_r1(tree: Graph, lists: ListAssignment, reduction: Reduction) -> None:
    _contract(reduction.kind == ReductionKind.R1 and len(reduction.path) == 3, "not an R1 move")
    v1, v2, v3 = reduction.path
    _contract(tree.degree(v1) == 1 and tree.degree(v2) == 2, "R1 needs d(v1) = 1 and d(v2) = 2")
    _contract(tree.has_edge(v1, v2) and tree.has_edge(v2, v3), "R1 vertices do not form a path")
    _contract(
        reduction.alpha in lists[v1] and reduction.alpha not in lists[v2],
        "R1 color must lie in L(v1) but not in L(v2)",
    )


def _check_r2(tree: Graph, lists: ListAssignment, reduction: Reduction) -> None:
    _contract(reduction.kind == ReductionKind.R2 and len(reduction.path) == 4, "not an R2 move")
    v1, v2, v3, v4 = reduction.path
    _contract(
        tree.degree(v1) == 1 and tree.degree(v2) == 2 and tree.degree(v3) == 2,
        "R2 needs degrees (1, 2, 2)",
    )
    _contract(
        tree.has_edge(v1, v2) and tree.has_edge(v2, v3) and tree.has_edge(v3, v4),
        "R2 vertices do not form a path",
    )
    _contract(lists[v1] <= lists[v2], "R2 needs L(v1) inside L(v2)")
    _contract(
        reduction.alpha in lists[v2] and reduction.alpha not in lists[v1],
        "R2 color must lie in L(v2) but not in L(v1)",
    )


def _check_v0(tree: Graph, lists: ListAssignment, config: V0Config) -> None:
    v0 = config.v0
    _contract(tree.degree(v0) >= 3, "v0 must have degree at least 3")
    _contract(config.k == tree.degree(v0) - 1, "k must equal d(v0) - 1")
    _contract(
        set(tree.neighbors(v0)) == {config.x0, *config.pendants}, "pendants and x0 must be N(v0)"
    )
    for i, x in enumerate(config.pendants):
        if i < config.ell:
            y = config.companions[i]
            _contract(
                tree.degree(x) == 2 and tree.degree(y) == 1 and tree.has_edge(x, y),
                f"pendant {x} with {y} is not a K2 leg",
            )
            _contract(lists[y] <= lists[x], f"list of {y} is not nested in the list of {x}")
        else:
            _contract(tree.degree(x) == 1, f"pendant {x} is not a K1 leg")
    _contract(
        all(len(lists[v]) == tree.degree(v) + 1 for v in tree.vertices),
        "lists must be normalized to deg(v) + 1 colors",
    )
    _contract(
        config.case_tag == _case_tag(lists, v0, config.pendants, config.companions),
        "case tag does not match the configuration",
    )


def apply_r1(tree: Graph, lists: ListAssignment, reduction: Reduction) -> Coloring:
    """Color T - {v1, v2} with alpha withheld from v3, then put alpha on v1."""
    _check_r1(tree, lists, reduction)
    sub = _shrink(tree, lists, reduction)
    child = tree_pcf_color(sub.graph, sub.lists)
    return Coloring.from_mapping(tree.n, _extend(tree, lists, reduction, sub, child))


def apply_r2(tree: Graph, lists: ListAssignment, reduction: Reduction) -> Coloring:
    """Color T - {v1, v2, v3} with alpha withheld from v4; alpha lands on v2 or v3."""
    _check_r2(tree, lists, reduction)
    sub = _shrink(tree, lists, reduction)
    child = tree_pcf_color(sub.graph, sub.lists)
    return Coloring.from_mapping(tree.n, _extend(tree, lists, reduction, sub, child))


def extend_v0(
    tree: Graph, lists: ListAssignment, config: V0Config, trace: Optional[SolveTrace] = None
) -> Coloring:
    """Color T0 recursively, then v0 and its legs by the recipe of the case tag."""
    _check_v0(tree, lists, config)
    reduction = Reduction(ReductionKind.V0, config=config)
    step = None
    if trace is not None:
        step = trace.record(TraceStep(ReductionKind.V0, config.case_tag, config.removed))
    sub = _shrink(tree, lists, reduction)
    child = tree_pcf_color(sub.graph, sub.lists, trace)
    return Coloring.from_mapping(tree.n, _extend(tree, lists, reduction, sub, child, step))
