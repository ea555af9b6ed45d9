import pytest

from pcfcolor.main import RunConfig, main
from pcfcolor.services import (
    check_pcf,
    gen_star,
    random_list_assignment,
    random_tree,
)
from pcfcolor.utils import (
    logger,
    parse_coloring,
    parse_list_assignment,
    serialize_edge_list,
    serialize_list_assignment,
)
from tests.factories import complete, cycle, lists_of, path, star


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        target = tmp_path / name
        target.write_text(text)
        return str(target)

    return _write


def test_color_tree(write, tmp_path, capsys):
    tree = random_tree(25, 3)
    lists = random_list_assignment(tree, 1, 40, 3)
    out = tmp_path / "out.coloring"
    code = main(
        [
            "color",
            write("t.graph", serialize_edge_list(tree)),
            write("t.lists", serialize_list_assignment(lists)),
            "-o",
            str(out),
            "--trace",
        ]
    )
    assert code == 0
    coloring = parse_coloring(out.read_text(), tree.n)
    assert check_pcf(tree, coloring, lists).valid
    stdout = capsys.readouterr().out
    assert "verdict: valid" in stdout
    assert "removed=" in stdout


def test_color_greedy_undersized_lists(write):
    g = cycle(5)
    code = main(
        [
            "color",
            write("c5.graph", serialize_edge_list(g)),
            write("c5.lists", serialize_list_assignment(lists_of(*([[1, 2, 3, 4]] * 5)))),
            "--algo",
            "greedy",
        ]
    )
    assert code == 2


def test_color_exact_star_is_negative(write, capsys):
    instance = gen_star(4)
    code = main(
        [
            "color",
            write("s.graph", serialize_edge_list(instance.graph)),
            write("s.lists", serialize_list_assignment(instance.lists)),
            "--algo",
            "exact",
        ]
    )
    assert code == 1
    assert "unsolvable" in capsys.readouterr().out


def test_color_tree_on_cycle_is_input_error(write):
    code = main(
        [
            "color",
            write("c5.graph", serialize_edge_list(cycle(5))),
            write("c5.lists", serialize_list_assignment(lists_of(*([[1, 2, 3]] * 5)))),
        ]
    )
    assert code == 2


class TestCheck:
    def test_rainbow_c5(self, write):
        graph = write("c5.graph", serialize_edge_list(cycle(5)))
        coloring = write("c5.coloring", "0 1\n1 2\n2 3\n3 4\n4 5\n")
        assert main(["check", graph, coloring]) == 0

    def test_star_with_equal_leaves(self, write, capsys):
        graph = write("s.graph", serialize_edge_list(star(3)))
        coloring = write("s.coloring", "0 2\n1 1\n2 1\n3 1\n")
        assert main(["check", graph, coloring]) == 1
        assert "cf_failures: 0" in capsys.readouterr().out

    def test_color_outside_list(self, write, capsys):
        graph = write("p.graph", serialize_edge_list(path(2)))
        lists = write("p.lists", "0: 1 2\n1: 1 2\n")
        coloring = write("p.coloring", "0 1\n1 3\n")
        assert main(["check", graph, coloring, "--lists", lists]) == 1
        assert "list_violations: 1" in capsys.readouterr().out

    def test_partial_coloring(self, write):
        graph = write("p.graph", serialize_edge_list(path(3)))
        coloring = write("p.coloring", "0 1\n2 1\n")
        assert main(["check", graph, coloring]) == 2


@pytest.mark.parametrize(
    "graph, expected",
    [(random_tree(12, 0), "d=1"), (cycle(5), "d=2"), (complete(5), "d=4")],
)
def test_degeneracy(write, capsys, graph, expected):
    assert main(["degeneracy", write("g.graph", serialize_edge_list(graph))]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == expected
    assert lines[2] == f"max_degree={graph.max_degree}"


def test_gen_flower_then_oracle(tmp_path, capsys):
    prefix = str(tmp_path / "flower")
    assert main(["gen", "flower", "--n", "2", "-o", prefix]) == 0
    assert main(["oracle", prefix + ".graph", prefix + ".lists"]) == 1
    assert "unsolvable" in capsys.readouterr().out


def test_gen_random_tree_is_reproducible(tmp_path):
    first, second = str(tmp_path / "a"), str(tmp_path / "b")
    assert main(["gen", "tree", "--n", "20", "--seed", "7", "-o", first]) == 0
    assert main(["gen", "tree", "--n", "20", "--seed", "7", "-o", second]) == 0
    for suffix in (".graph", ".lists"):
        assert (tmp_path / ("a" + suffix)).read_bytes() == (tmp_path / ("b" + suffix)).read_bytes()


def test_gen_degenerate_lists_fit_greedy(tmp_path):
    prefix = str(tmp_path / "d")
    assert main(["gen", "degenerate", "--n", "30", "--d", "3", "--seed", "1", "-o", prefix]) == 0
    assert main(["color", prefix + ".graph", prefix + ".lists", "--algo", "greedy"]) == 0


def test_gen_needs_size(tmp_path):
    assert main(["gen", "star", "-o", str(tmp_path / "s")]) == 2
    assert main(["gen", "star", "--n", "2", "-o", str(tmp_path / "s")]) == 2


def test_oracle_count(write, capsys):
    graph = write("k2.graph", serialize_edge_list(path(2)))
    lists = write("k2.lists", "0: 1 2\n1: 1 2\n")
    assert main(["oracle", graph, lists, "--count"]) == 0
    assert "count=2" in capsys.readouterr().out


class TestRefute:
    def test_star_witness(self, write, tmp_path):
        out = tmp_path / "witness.lists"
        graph = write("s.graph", serialize_edge_list(star(3)))
        assert main(["refute", graph, "--k", "0", "--universe", "4", "-o", str(out)]) == 0
        witness = parse_list_assignment(out.read_text(), 4)
        assert witness[1] == witness[2] == witness[3]

    def test_k2_has_no_witness(self, write):
        graph = write("k2.graph", serialize_edge_list(path(2)))
        assert main(["refute", graph, "--k", "1", "--universe", "4"]) == 1

    def test_assignment_budget(self, write):
        graph = write("p3.graph", serialize_edge_list(path(3)))
        code = main(["refute", graph, "--k", "1", "--universe", "6", "--max-assignments", "1"])
        assert code == 4


def test_chromatic(write, capsys):
    assert main(["chromatic", write("c5.graph", serialize_edge_list(cycle(5)))]) == 0
    assert "chi_pcf=5" in capsys.readouterr().out


def test_fuzz(capsys):
    assert main(["fuzz", "--trees", "5", "--seed", "11"]) == 0
    assert "failures=0" in capsys.readouterr().out


def test_missing_file_is_input_error(tmp_path):
    assert main(["degeneracy", str(tmp_path / "nope.graph")]) == 2


def test_parse_error_is_input_error(write):
    assert main(["degeneracy", write("bad.graph", "2 1\n0 5\n")]) == 2


def test_run_config_requires_inputs():
    with pytest.raises(ValueError):
        RunConfig(command="color")
    assert RunConfig(command="fuzz").trees == 200


def test_verbose_switches_log_level():
    try:
        assert main(["--verbose", "fuzz", "--trees", "2"]) == 0
        assert logger.level == "DEBUG"
    finally:
        logger.configure("INFO")
