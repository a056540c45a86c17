import io as stdio

import pytest

from epg import io
from epg.cli import run
from epg.graph import format_graph, gen_complete_bipartite, gen_cycle

EXAMPLE = "x1 x2 x3\nx1 x3 x4\nx2 x3 x4\n"


def call(*argv):
    out, err = stdio.StringIO(), stdio.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def k310(tmp_path):
    path = tmp_path / "k310.txt"
    path.write_text(format_graph(gen_complete_bipartite(3, 10)))
    return path


def test_kmn_then_verify(tmp_path, k310):
    rep = tmp_path / "r.json"
    assert call("kmn", "--m", 3, "--n", 10, "--strategy", "comb", "-o", rep)[0] == 0
    code, out, _ = call("verify", "--graph", k310, "--rep", rep, "--max-bends", 4)
    assert code == 0 and "ok: True" in out
    code, out, _ = call("verify", "--graph", k310, "--rep", rep, "--max-bends", 3)
    assert code == 1 and "ok: False" in out


def test_verify_vertex_mismatch(tmp_path, k310):
    rep = tmp_path / "r.json"
    call("kmn", "--m", 2, "--n", 2, "-o", rep)
    assert call("verify", "--graph", k310, "--rep", rep)[0] == 1


def test_bounds_output():
    code, out, _ = call("bounds", "--m", 3, "--n", 40)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "lower 3 upper 4"
    assert lines[1].startswith("lower from:") and "K3-ladder" in lines[1]
    assert lines[2].startswith("upper from:") and "comb" in lines[2]
    assert call("bounds", "--m", 5, "--n", 3)[0] == 2


@pytest.mark.parametrize("strategy", ["global-cover", "local-cover", "degeneracy", "treewidth", "edge-coloring"])
def test_construct_strategies(tmp_path, strategy):
    g = tmp_path / "g.txt"
    g.write_text(format_graph(gen_cycle(6)))
    rep = tmp_path / "r.json"
    assert call("construct", "--graph", g, "--strategy", strategy, "-o", rep)[0] == 0
    assert call("verify", "--graph", g, "--rep", rep)[0] == 0


def test_construct_with_cover_file(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("a b\nb c\na c\nc d\n")
    cover = tmp_path / "c.json"
    cover.write_text('[[["a", "b", "c"]], [["c", "d"]]]')
    code, out, _ = call("construct", "--graph", g, "--strategy", "global-cover", "--cover", cover)
    assert code == 0
    assert io.representation_from_json(out).max_bends <= 1


def test_pretzel_and_crossings(tmp_path):
    rep = tmp_path / "p.json"
    code, out, _ = call("pretzel", "--j", 3, "-o", rep)
    assert code == 0 and out == "crossings 12\n"
    assert call("crossings", "--rep", rep, "--u", "p1", "--v", "p2")[1] == "12\n"
    assert call("crossings", "--rep", rep, "--u", "p1", "--v", "zz")[0] == 2
    code, out, _ = call("pretzel", "--j", 3, "--blowup", 4)
    assert out == "total crossings 70\n"


def test_exact(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text(format_graph(gen_cycle(4)))
    assert call("exact", "--graph", g, "--max-k", 2)[1] == "exact 1\n"
    assert call("exact", "--graph", g, "--max-k", 0)[1] == "lower bound 1\n"


def test_reduce_pipeline(tmp_path):
    f = tmp_path / "ex.txt"
    f.write_text(EXAMPLE)
    g, rep = tmp_path / "g.txt", tmp_path / "r.json"
    code, out, _ = call("reduce", "--formula", f, "--assign", "auto", "-o", g, "--rep", rep)
    assert code == 0
    assert out.splitlines()[0].startswith("vertices 74 ")
    assert "true: x3" in out
    assert call("verify", "--graph", g, "--rep", rep, "--max-bends", 1)[0] == 0


def test_reduce_unsatisfiable_and_bad_assignment(tmp_path):
    f = tmp_path / "u.txt"
    f.write_text("x y z\nx y w\nx z w\ny z w\nx u z\n")
    code, out, _ = call("reduce", "--formula", f, "--assign", "auto")
    assert code == 1 and "unsatisfiable" in out
    f.write_text(EXAMPLE)
    a = tmp_path / "a.txt"
    a.write_text("x1 true\nx2 true\nx3 false\nx4 false\n")
    assert call("reduce", "--formula", f, "--assign", a)[0] == 1


def test_render(tmp_path):
    rep, svg = tmp_path / "p.json", tmp_path / "p.svg"
    call("pretzel", "--j", 3, "-o", rep)
    assert call("render", "--rep", rep, "-o", svg, "--crossings")[0] == 0
    assert svg.read_text().count('class="crossing"') == 12


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["kmn", "--m", "3", "--strategy", "comb"],
        ["verify", "--graph", "/nonexistent", "--rep", "/nonexistent"],
        ["render", "--rep", "x.json"],
    ],
)
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_construction_failure_exit_code():
    code, _, err = call("kmn", "--m", 5, "--strategy", "m4")
    assert code == 1 and "construction failed" in err


def test_bad_formula(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("x x y\n")
    code, _, err = call("reduce", "--formula", f)
    assert code == 2 and "repeat" in err
