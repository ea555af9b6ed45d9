import dataclasses
import random
from collections import Counter

import pytest
from hypothesis import given

from pcfcolor.exceptions import ContractError, InputError, TheoremViolation
from pcfcolor.models import CaseTag, ListAssignment, ReductionKind, SolveTrace
from pcfcolor.services import (
    adversarial_tree,
    apply_r1,
    apply_r2,
    brute_force_pcf,
    build_graph,
    check_pcf,
    extend_v0,
    find_reduction,
    forest_pcf_color,
    normalize_lists,
    random_list_assignment,
    random_tree,
    select_gamma_case5,
    tree_pcf_color,
)
from tests.factories import cycle, lists_of, path, tree_instances


def spider(center, doubles=(), singles=(), x0=None, x0_leaves=()):
    """Center 0, then K2 legs (x, y), then K1 legs, then x0 and its leaves."""
    edges, lists = [], [center]
    for x_list, y_list in doubles:
        x = len(lists)
        edges += [(0, x), (x, x + 1)]
        lists += [x_list, y_list]
    for x_list in singles:
        edges.append((0, len(lists)))
        lists.append(x_list)
    if x0 is not None:
        hub = len(lists)
        edges.append((0, hub))
        lists.append(x0)
        for leaf_list in x0_leaves:
            edges.append((hub, len(lists)))
            lists.append(leaf_list)
    return build_graph(len(lists), edges), lists_of(*lists)


BIG = dict(x0=[1, 2, 3, 4, 5], x0_leaves=[[1, 2]] * 3)


@pytest.fixture
def case2():
    return spider([1, 2, 3, 4, 5], doubles=[([1, 2, 3], [1, 2])] * 3, **BIG)


@pytest.fixture
def case3():
    return spider([1, 2, 3, 4, 5], doubles=[([1, 2, 3], [2, 3])] * 2, singles=[[1, 2]], **BIG)


@pytest.fixture
def case4():
    return spider([1, 2, 3, 8, 9], singles=[[1, 2], [3, 4], [5, 6]], **BIG)


@pytest.fixture
def case5():
    return spider([1, 2, 3, 4, 9], singles=[[1, 2], [3, 4], [5, 6]], **BIG)


@pytest.fixture
def case5_k4_dense():
    return spider(
        [1, 2, 3, 4, 5, 6],
        doubles=[([1, 2, 3], [2, 3]), ([1, 4, 5], [4, 5])],
        singles=[[2, 4], [3, 5]],
        x0=[11, 12, 13, 14, 15],
        x0_leaves=[[11, 12]] * 3,
    )


@pytest.fixture
def case5_k5_dense():
    return spider(
        [1, 2, 3, 4, 5, 6, 7],
        doubles=[([1, 2, 3], [2, 3]), ([4, 5, 6], [5, 6]), ([1, 2, 4], [1, 4])],
        singles=[[3, 5], [1, 6]],
        x0=[11, 12, 13, 14, 15],
        x0_leaves=[[11, 12]] * 3,
    )


@pytest.fixture
def case1_second_leg_leads():
    # the first leg's private color equals the color of x0
    return spider(
        [1, 2, 3, 4], doubles=[([1, 2, 3], [2, 3]), ([4, 5, 6], [5, 6])], singles=[[1, 9]]
    )


@pytest.fixture
def case2_all_alpha():
    return spider(
        [1, 2, 3, 4, 5],
        doubles=[([1, 2, 3], [2, 3]), ([1, 4, 5], [4, 5]), ([1, 2, 4], [2, 4])],
        singles=[[1, 9]],
    )


@pytest.fixture
def case3_all_alpha():
    # the first K1 leg has the smaller id and becomes T0
    return spider([1, 2, 3, 4, 5], doubles=[([1, 2, 3], [2, 3])] * 2, singles=[[1, 9], [1, 4]])


@pytest.fixture
def case4_fallback():
    # T0 is x0 with two leaves; x0 ends up 8 and its unique neighbor color is 7
    return spider(
        [1, 2, 3, 7, 8],
        singles=[[1, 2], [2, 3], [1, 3]],
        x0=[7, 8, 10, 11],
        x0_leaves=[[7, 8], [7, 10]],
    )


def solve_traced(tree, lists):
    trace = SolveTrace()
    coloring = tree_pcf_color(tree, lists, trace)
    assert check_pcf(tree, coloring, lists).valid
    return coloring, trace


class TestNormalize:
    def test_keeps_smallest_colors(self):
        lists = normalize_lists(path(2), lists_of([9, 5, 1], [2, 3]))
        assert lists == lists_of([1, 5], [2, 3])

    def test_rejects_short_lists(self):
        with pytest.raises(InputError):
            normalize_lists(path(3), lists_of([1, 2], [1, 2], [1, 2]))

    def test_rejects_extra_lists(self):
        with pytest.raises(InputError, match="lists cover 3 vertices, graph has 2"):
            normalize_lists(path(2), lists_of([1, 2], [1, 2], [1, 2]))


class TestFindReduction:
    def test_small_trees_are_base(self):
        assert find_reduction(path(1), lists_of([1])).kind == ReductionKind.BASE
        assert find_reduction(path(2), lists_of([1, 2], [1, 2])).kind == ReductionKind.BASE

    def test_p3_with_foreign_leaf_color_is_r1(self, p3):
        reduction = find_reduction(p3, lists_of([1, 4], [1, 2, 3], [1, 2]))
        assert reduction.kind == ReductionKind.R1
        assert reduction.path == (0, 1, 2)
        assert reduction.alpha == 4

    def test_p3_with_nested_lists_is_base(self, p3):
        reduction = find_reduction(p3, lists_of([1, 2], [1, 2, 3], [1, 2]))
        assert reduction.kind == ReductionKind.BASE3

    def test_p4_with_nested_lists_is_r2(self):
        reduction = find_reduction(path(4), lists_of([1, 2], [1, 2, 3], [1, 2, 3], [1, 2]))
        assert reduction.kind == ReductionKind.R2
        assert reduction.path == (0, 1, 2, 3)
        assert reduction.alpha == 3

    def test_spider_of_small_legs(self):
        tree, lists = spider(
            [1, 2, 3, 4], doubles=[([1, 2, 3], [1, 2])], singles=[[1, 2], [1, 2]]
        )
        reduction = find_reduction(tree, lists)
        assert reduction.kind == ReductionKind.V0
        config = reduction.config
        assert (config.v0, config.x0) == (0, 3)
        assert config.pendants == (1, 4)
        assert config.companions == (2,)
        assert (config.k, config.ell) == (2, 1)
        assert config.case_tag == CaseTag.CASE1

    @pytest.mark.parametrize(
        "name, tag",
        [
            ("case2", CaseTag.CASE2),
            ("case3", CaseTag.CASE3),
            ("case4", CaseTag.CASE4),
            ("case5", CaseTag.CASE5),
            ("case5_k4_dense", CaseTag.CASE5),
            ("case5_k5_dense", CaseTag.CASE5),
            ("case1_second_leg_leads", CaseTag.CASE1),
            ("case2_all_alpha", CaseTag.CASE2),
            ("case3_all_alpha", CaseTag.CASE3),
            ("case4_fallback", CaseTag.CASE4),
        ],
    )
    def test_case_tags(self, request, name, tag):
        tree, lists = request.getfixturevalue(name)
        reduction = find_reduction(tree, lists)
        assert reduction.kind == ReductionKind.V0
        assert reduction.config.v0 == 0
        assert reduction.case_tag == tag

    def test_big_part_is_t0(self, case2):
        tree, lists = case2
        config = find_reduction(tree, lists).config
        assert config.x0 == 7
        assert config.part == (7, 8, 9, 10)
        assert config.removed == (0, 1, 2, 3, 4, 5, 6)

    def test_leafless_graph_raises(self):
        with pytest.raises(TheoremViolation) as info:
            find_reduction(cycle(4), ListAssignment.uniform(4, range(1, 4)))
        assert info.value.graph == cycle(4)


class TestSelectGamma:
    def test_single_list(self, case5):
        tree, lists = case5
        config = find_reduction(tree, lists).config
        assert select_gamma_case5(config, lists) == (1, (0,))

    def test_k4_every_color_twice_uses_last_leaf(self, case5_k4_dense):
        tree, lists = case5_k4_dense
        config = find_reduction(tree, lists).config
        gamma, where = select_gamma_case5(config, lists)
        assert gamma in lists[config.pendants[-1]]
        assert (gamma, where) == (3, (0, 3))

    def test_k5_pair(self, case5_k5_dense):
        tree, lists = case5_k5_dense
        config = find_reduction(tree, lists).config
        assert select_gamma_case5(config, lists) == (2, (0, 2))


class TestMoves:
    def test_apply_r1(self, p3):
        lists = lists_of([1, 4], [1, 2, 3], [1, 2])
        coloring = apply_r1(p3, lists, find_reduction(p3, lists))
        assert coloring[0] == 4
        assert check_pcf(p3, coloring, lists).valid

    def test_apply_r2_places_alpha_on_the_path(self):
        tree = path(4)
        lists = lists_of([1, 2], [1, 2, 3], [1, 2, 3], [1, 2])
        coloring = apply_r2(tree, lists, find_reduction(tree, lists))
        assert 3 in (coloring[1], coloring[2])
        assert check_pcf(tree, coloring, lists).valid

    def test_moves_check_their_kind(self, p3):
        lists = lists_of([1, 4], [1, 2, 3], [1, 2])
        r1 = find_reduction(p3, lists)
        with pytest.raises(ContractError):
            apply_r2(p3, lists, r1)
        with pytest.raises(ContractError):
            apply_r1(p3, lists, dataclasses.replace(r1, alpha=1))

    def test_extend_v0(self, case3):
        tree, lists = case3
        config = find_reduction(tree, lists).config
        trace = SolveTrace()
        coloring = extend_v0(tree, lists, config, trace)
        assert check_pcf(tree, coloring, lists).valid
        assert trace.steps[0].case_tag == CaseTag.CASE3
        assert trace.steps[0].scratch.gamma == coloring[0]

    def test_extend_v0_rejects_wrong_tag(self, case3):
        tree, lists = case3
        config = find_reduction(tree, lists).config
        with pytest.raises(ContractError):
            extend_v0(tree, lists, dataclasses.replace(config, case_tag=CaseTag.CASE2))

    def test_extend_v0_needs_normalized_lists(self, case3):
        tree, lists = case3
        config = find_reduction(tree, lists).config
        with pytest.raises(ContractError):
            extend_v0(tree, lists.replace(9, [1, 2, 3]), config)


class TestTreeColoring:
    def test_single_vertex(self):
        assert dict(tree_pcf_color(path(1), lists_of([7, 5]))) == {0: 5}

    def test_single_edge(self):
        assert dict(tree_pcf_color(path(2), lists_of([1, 2], [1, 2]))) == {0: 1, 1: 2}

    def test_p3_base(self, p3):
        lists = lists_of([1, 2], [1, 2, 3], [1, 2])
        assert dict(tree_pcf_color(p3, lists)) == {0: 1, 1: 3, 2: 2}

    def test_rejects_non_tree(self, c5):
        with pytest.raises(InputError):
            tree_pcf_color(c5, ListAssignment.uniform(5, range(1, 4)))

    def test_rejects_short_lists(self, p3):
        with pytest.raises(InputError):
            tree_pcf_color(p3, lists_of([1, 2], [1, 2], [1, 2]))

    def test_case2_trace(self, case2):
        _, trace = solve_traced(*case2)
        assert [step.label for step in trace.steps] == ["case2", "case1", "base"]
        assert trace.steps[0].removed == (0, 1, 2, 3, 4, 5, 6)
        assert trace.steps[1].removed == (7, 9, 10)
        scratch = trace.steps[0].scratch
        assert scratch.alpha != scratch.gamma
        assert "case2" in trace.render()

    def test_case4_uses_private_color(self, case4):
        coloring, trace = solve_traced(*case4)
        assert coloring[0] in (8, 9)
        assert trace.steps[0].scratch.gamma == 8

    def test_case5_pivot_is_unique_at_v0(self, case5):
        tree, lists = case5
        coloring, trace = solve_traced(tree, lists)
        assert coloring[1] == 1
        assert trace.steps[0].scratch.branch == "single"

    def test_case5_leaf_pivot(self, case5_k4_dense):
        tree, lists = case5_k4_dense
        coloring, trace = solve_traced(tree, lists)
        assert trace.steps[0].scratch.branch == "leaf-pivot"
        assert coloring[6] == 3

    def test_case5_pair(self, case5_k5_dense):
        coloring, trace = solve_traced(*case5_k5_dense)
        assert trace.steps[0].scratch.branch == "pair"
        assert coloring[1] == 2

    def test_case1_second_leg_leads(self, case1_second_leg_leads):
        coloring, trace = solve_traced(*case1_second_leg_leads)
        scratch = trace.steps[0].scratch
        assert scratch.branch == "ell=2 lead=2"
        assert (scratch.alpha, scratch.gamma) == (1, 4)
        assert dict(coloring) == {0: 2, 1: 1, 2: 3, 3: 4, 4: 5, 5: 1}

    def test_case2_neighbors_all_alpha(self, case2_all_alpha):
        coloring, trace = solve_traced(*case2_all_alpha)
        scratch = trace.steps[0].scratch
        assert scratch.branch == "b"
        assert (scratch.alpha, scratch.gamma, scratch.i_gamma) == (1, 3, (1,))
        assert dict(coloring) == {0: 3, 1: 1, 2: 2, 3: 4, 4: 5, 5: 1, 6: 2, 7: 1}

    def test_case3_neighbors_all_alpha(self, case3_all_alpha):
        coloring, trace = solve_traced(*case3_all_alpha)
        scratch = trace.steps[0].scratch
        assert scratch.branch == "b"
        assert (scratch.gamma, scratch.i_gamma) == (4, ())
        assert dict(coloring) == {0: 4, 1: 2, 2: 3, 3: 1, 4: 2, 5: 1, 6: 1}

    def test_case4_fallback(self, case4_fallback):
        coloring, trace = solve_traced(*case4_fallback)
        assert [step.label for step in trace.steps] == ["case4", "r1", "base"]
        scratch = trace.steps[0].scratch
        assert scratch.branch == "b"
        assert (scratch.alpha, scratch.beta, scratch.gamma) == (8, 7, 7)
        assert dict(coloring) == {0: 1, 1: 2, 2: 2, 3: 3, 4: 8, 5: 7, 6: 10}

    @pytest.mark.parametrize("seed", range(500))
    def test_random_trees(self, seed):
        rng = random.Random(seed)
        tree = random_tree(rng.randint(1, 40), seed)
        universe = tree.max_degree + 1 + seed % 3
        lists = random_list_assignment(tree, 1, universe, seed)
        solve_traced(tree, lists)

    @given(tree_instances())
    def test_hypothesis_trees(self, instance):
        solve_traced(*instance)

    @pytest.mark.parametrize("seed", range(200))
    def test_agrees_with_oracle(self, seed):
        rng = random.Random(seed)
        tree = random_tree(rng.randint(1, 12), seed)
        lists = random_list_assignment(tree, 1, tree.max_degree + 2, seed)
        assert brute_force_pcf(tree, lists).solved
        solve_traced(tree, lists)


class TestAdversarial:
    def test_every_move_fires(self):
        totals = Counter()
        branches = Counter()
        for seed in range(200):
            instance = adversarial_tree(seed)
            _, trace = solve_traced(instance.graph, instance.lists)
            totals.update(trace.counts())
            branches.update((s.label, s.scratch.branch) for s in trace.steps if s.scratch is not None)
        for tag in CaseTag:
            assert totals[tag.value] >= 10, totals
        assert totals["r1"] >= 10 and totals["r2"] >= 10
        for label, branch in [
            ("case1", "ell=2 lead=1"),
            ("case1", "ell=2 lead=2"),
            ("case2", "a"),
            ("case2", "b"),
            ("case3", "a"),
            ("case3", "b"),
            ("case4", "a"),
            ("case4", "b"),
            ("case5", "single"),
            ("case5", "pair"),
            ("case5", "leaf-pivot"),
        ]:
            assert branches[(label, branch)] >= 1, branches

    def test_reproducible(self):
        assert adversarial_tree(17) == adversarial_tree(17)


class TestForest:
    def test_components_and_isolated_vertices(self):
        forest = build_graph(6, [(0, 1), (2, 3), (3, 4)])
        lists = lists_of([1, 2], [1, 2], [1, 4], [1, 2, 3], [1, 2], [6, 8])
        trace = SolveTrace()
        coloring = forest_pcf_color(forest, lists, trace)
        assert check_pcf(forest, coloring, lists).valid
        assert coloring[5] == 6
        assert trace.steps[0].removed == (0, 1)

    def test_rejects_cycles(self, c5):
        with pytest.raises(InputError):
            forest_pcf_color(c5, ListAssignment.uniform(5, range(1, 4)))
