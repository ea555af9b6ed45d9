# main.py - pcfcolor command-line front end

import argparse
import sys
from pathlib import Path
from typing import Callable, Literal, Optional, Sequence

from pydantic import BaseModel, Field, ValidationError, model_validator

from .config import settings
from .exceptions import BudgetExhausted, ContractError, InputError, TheoremViolation
from .models import (
    Graph,
    Instance,
    ListAssignment,
    RefuteStatus,
    SearchBudget,
    SearchStatus,
    SolveTrace,
)
from .services import (
    adversarial_tree,
    brute_force_pcf,
    check_pcf,
    count_pcf_colorings,
    degeneracy_ordering,
    forest_pcf_color,
    gen_c5_uniform,
    gen_flower,
    gen_star,
    greedy_pcf_color,
    pcf_chromatic_number,
    probe_degeneracy_bound,
    random_degenerate,
    random_list_assignment,
    random_tree,
    refute_choosability,
    tree_pcf_color,
)
from .utils import (
    logger,
    parse_coloring,
    parse_edge_list,
    parse_list_assignment,
    serialize_coloring,
    serialize_edge_list,
    serialize_list_assignment,
)

# ===== exit codes =====

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CONTRACT = 3
EXIT_BUDGET = 4

Command = Literal["color", "check", "degeneracy", "gen", "oracle", "refute", "chromatic", "fuzz"]

_REQUIRED: dict[str, tuple[str, ...]] = {
    "color": ("graph", "lists"),
    "check": ("graph", "coloring"),
    "degeneracy": ("graph",),
    "gen": ("family", "output"),
    "oracle": ("graph", "lists"),
    "refute": ("graph", "universe"),
    "chromatic": ("graph",),
    "fuzz": (),
}


class RunConfig(BaseModel):
    """One CLI invocation, validated before anything is read or solved."""

    command: Command = Field(..., description="Subcommand")
    graph: Optional[Path] = Field(None, description="Edge-list file")
    lists: Optional[Path] = Field(None, description="List-assignment file")
    coloring: Optional[Path] = Field(None, description="Coloring file")
    algo: Literal["greedy", "tree", "exact"] = Field("tree", description="Coloring algorithm")
    family: Optional[Literal["star", "flower", "c5", "tree", "degenerate"]] = Field(
        None, description="Instance family for gen"
    )
    n: Optional[int] = Field(None, ge=1, description="Instance size parameter")
    d: int = Field(2, ge=1, description="Degeneracy bound for gen degenerate")
    k: Optional[int] = Field(None, description="List surplus over the degree")
    seed: int = Field(0, description="Random seed")
    universe: Optional[int] = Field(None, ge=1, description="Colors available to the refuter")
    max_nodes: Optional[int] = Field(None, ge=1, description="Search-node budget")
    max_assignments: Optional[int] = Field(None, ge=1, description="Refuter assignment budget")
    max_k: int = Field(8, ge=1, description="Largest k tried by chromatic")
    trees: int = Field(200, ge=1, description="Adversarial trees checked by fuzz")
    output: Optional[Path] = Field(None, description="Output file or prefix")
    trace: bool = Field(False, description="Print the tree solver's reductions")
    count: bool = Field(False, description="Count colorings instead of finding one")
    verbose: bool = Field(False, description="Log at DEBUG on stderr")

    @model_validator(mode="after")
    def _check_required(self) -> "RunConfig":
        missing = [name for name in _REQUIRED[self.command] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command} needs {', '.join(missing)}")
        if self.command == "gen" and self.family != "c5" and self.n is None:
            raise ValueError(f"gen {self.family} needs --n")
        return self

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(
            max_nodes=self.max_nodes or settings.ORACLE_MAX_NODES,
            max_assignments=self.max_assignments or settings.REFUTE_MAX_ASSIGNMENTS,
        )


# ===== file helpers =====


def _read(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from exc


def _load(cfg: RunConfig) -> tuple[Graph, Optional[ListAssignment]]:
    graph = parse_edge_list(_read(cfg.graph))
    lists = parse_list_assignment(_read(cfg.lists), graph.n) if cfg.lists else None
    return graph, lists


def _emit(path: Optional[Path], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        _write(path, text)
        print(f"wrote {path}")


def _dump_instance(exc: TheoremViolation) -> None:
    print(f"error: {exc}", file=sys.stderr)
    if exc.graph is not None:
        print("# graph", file=sys.stderr)
        sys.stderr.write(serialize_edge_list(exc.graph))
    if exc.lists is not None:
        print("# lists", file=sys.stderr)
        sys.stderr.write(serialize_list_assignment(exc.lists))
    if isinstance(exc.trace, SolveTrace) and exc.trace.steps:
        print("# trace", file=sys.stderr)
        print(exc.trace.render(), file=sys.stderr)


# ===== subcommands =====


def cmd_color(cfg: RunConfig) -> int:
    graph, lists = _load(cfg)
    trace = SolveTrace()
    if cfg.algo == "greedy":
        coloring = greedy_pcf_color(graph, lists)
    elif cfg.algo == "tree":
        coloring = forest_pcf_color(graph, lists, trace)
    else:
        result = brute_force_pcf(graph, lists, cfg.budget)
        if result.status == SearchStatus.UNSOLVABLE:
            print("unsolvable")
            return EXIT_NEGATIVE
        if result.status == SearchStatus.BUDGET_EXHAUSTED:
            print(f"budget exhausted after {result.nodes} nodes")
            return EXIT_BUDGET
        coloring = result.coloring

    report = check_pcf(graph, coloring, lists)
    if not report.valid:
        print(report.render())
        logger.error(f"{cfg.algo} returned a coloring the checker rejects")
        return EXIT_CONTRACT
    _emit(cfg.output, serialize_coloring(coloring))
    if cfg.trace and cfg.algo == "tree":
        print(trace.render())
        print(" ".join(f"{label}={times}" for label, times in sorted(trace.counts().items())))
    print(report.render())
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    graph, lists = _load(cfg)
    coloring = parse_coloring(_read(cfg.coloring), graph.n)
    if not coloring.is_total():
        raise InputError(f"coloring is partial; uncolored vertices: {list(coloring.uncolored())}")
    report = check_pcf(graph, coloring, lists)
    print(report.render())
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_degeneracy(cfg: RunConfig) -> int:
    graph, _ = _load(cfg)
    ordering = degeneracy_ordering(graph)
    print(f"d={ordering.d}")
    print("order: " + " ".join(map(str, ordering.order)))
    print(f"max_degree={graph.max_degree}")
    return EXIT_OK


def _random_instance(cfg: RunConfig) -> Instance:
    if cfg.family == "tree":
        graph = random_tree(cfg.n, cfg.seed)
        k = cfg.k if cfg.k is not None else 1
    else:
        graph = random_degenerate(cfg.n, cfg.d, cfg.seed)
        k = cfg.k if cfg.k is not None else degeneracy_ordering(graph).d + 1
    universe = max(settings.RANDOM_UNIVERSE_FACTOR * graph.n, graph.max_degree + k)
    lists = random_list_assignment(graph, k, universe, cfg.seed)
    return Instance(name=f"{cfg.family}-{cfg.n}-{cfg.seed}", graph=graph, lists=lists)


def cmd_gen(cfg: RunConfig) -> int:
    if cfg.family == "star":
        instance = gen_star(cfg.n)
    elif cfg.family == "flower":
        instance = gen_flower(cfg.n)
    elif cfg.family == "c5":
        instance = gen_c5_uniform()
    else:
        instance = _random_instance(cfg)
    prefix = str(cfg.output)
    _write(Path(prefix + ".graph"), serialize_edge_list(instance.graph))
    _write(Path(prefix + ".lists"), serialize_list_assignment(instance.lists))
    print(f"{instance.name}: n={instance.graph.n} m={instance.graph.m} expected={instance.expected.value}")
    print(f"wrote {prefix}.graph {prefix}.lists")
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    graph, lists = _load(cfg)
    if cfg.count:
        budget = cfg.budget if cfg.max_nodes else None
        print(f"count={count_pcf_colorings(graph, lists, budget)}")
        return EXIT_OK
    result = brute_force_pcf(graph, lists, cfg.budget)
    if result.status == SearchStatus.UNSOLVABLE:
        print(f"unsolvable (nodes={result.nodes})")
        return EXIT_NEGATIVE
    if result.status == SearchStatus.BUDGET_EXHAUSTED:
        print(f"budget exhausted (nodes={result.nodes})")
        return EXIT_BUDGET
    print(f"solvable (nodes={result.nodes})")
    if cfg.output is not None:
        _emit(cfg.output, serialize_coloring(result.coloring))
    return EXIT_OK


def cmd_refute(cfg: RunConfig) -> int:
    graph, _ = _load(cfg)
    if cfg.k is None:
        result = probe_degeneracy_bound(graph, cfg.universe, cfg.budget)
    else:
        result = refute_choosability(graph, cfg.k, cfg.universe, cfg.budget)
    if result.status == RefuteStatus.WITNESS:
        print(f"witness found after {result.assignments_checked} assignments")
        _emit(cfg.output, serialize_list_assignment(result.witness))
        return EXIT_OK
    if result.status == RefuteStatus.NONE_FOUND:
        print(f"no witness among {result.assignments_checked} assignments")
        return EXIT_NEGATIVE
    print(f"budget exhausted after {result.assignments_checked} assignments")
    return EXIT_BUDGET


def cmd_chromatic(cfg: RunConfig) -> int:
    graph, _ = _load(cfg)
    budget = cfg.budget if cfg.max_nodes else None
    k = pcf_chromatic_number(graph, cfg.max_k, budget)
    if k is None:
        print(f"chi_pcf > {cfg.max_k}")
        return EXIT_NEGATIVE
    print(f"chi_pcf={k}")
    return EXIT_OK


def cmd_fuzz(cfg: RunConfig) -> int:
    totals = SolveTrace().counts()
    failures = 0
    for seed in range(cfg.seed, cfg.seed + cfg.trees):
        instance = adversarial_tree(seed)
        trace = SolveTrace()
        try:
            tree_pcf_color(instance.graph, instance.lists, trace)
        except ContractError as exc:
            failures += 1
            logger.error(f"{instance.name}: {exc}")
            continue
        totals.update(trace.counts())
    print(" ".join(f"{label}={times}" for label, times in sorted(totals.items())))
    print(f"trees={cfg.trees} failures={failures}")
    return EXIT_OK if failures == 0 else EXIT_CONTRACT


COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "color": cmd_color,
    "check": cmd_check,
    "degeneracy": cmd_degeneracy,
    "gen": cmd_gen,
    "oracle": cmd_oracle,
    "refute": cmd_refute,
    "chromatic": cmd_chromatic,
    "fuzz": cmd_fuzz,
}


# ===== argument parsing =====


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME, description="Proper conflict-free list coloring toolkit"
    )
    parser.add_argument("--version", action="version", version=settings.APP_VERSION)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph from its lists")
    p.add_argument("graph", type=Path)
    p.add_argument("lists", type=Path)
    p.add_argument("--algo", choices=["greedy", "tree", "exact"], default="tree")
    p.add_argument("-o", "--output", type=Path)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--max-nodes", type=int)

    p = sub.add_parser("check", help="verify a coloring")
    p.add_argument("graph", type=Path)
    p.add_argument("coloring", type=Path)
    p.add_argument("--lists", type=Path)

    p = sub.add_parser("degeneracy", help="print a degeneracy ordering")
    p.add_argument("graph", type=Path)

    p = sub.add_parser("gen", help="write a gadget or random instance")
    p.add_argument("family", choices=["star", "flower", "c5", "tree", "degenerate"])
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output", type=Path, required=True, help="prefix for .graph/.lists")

    p = sub.add_parser("oracle", help="exhaustive PCF L-colorability")
    p.add_argument("graph", type=Path)
    p.add_argument("lists", type=Path)
    p.add_argument("--count", action="store_true")
    p.add_argument("-o", "--output", type=Path)
    p.add_argument("--max-nodes", type=int)

    p = sub.add_parser("refute", help="search for a non-colorable list assignment")
    p.add_argument("graph", type=Path)
    p.add_argument("--k", type=int, help="list surplus; defaults to the degeneracy")
    p.add_argument("--universe", type=int, required=True)
    p.add_argument("-o", "--output", type=Path)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-assignments", type=int)

    p = sub.add_parser("chromatic", help="PCF chromatic number of a small graph")
    p.add_argument("graph", type=Path)
    p.add_argument("--max-k", type=int)
    p.add_argument("--max-nodes", type=int)

    p = sub.add_parser("fuzz", help="run the tree solver on adversarial trees")
    p.add_argument("--trees", type=int)
    p.add_argument("--seed", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**{key: value for key, value in vars(args).items() if value is not None})
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.verbose:
        logger.configure("DEBUG")

    try:
        return COMMANDS[cfg.command](cfg)
    except TheoremViolation as exc:
        logger.error(f"{cfg.command}: {exc}")
        _dump_instance(exc)
        return EXIT_CONTRACT
    except ContractError as exc:
        logger.error(f"{cfg.command}: internal check failed: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}")
        return EXIT_BUDGET
    except InputError as exc:
        logger.warning(f"{cfg.command}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
