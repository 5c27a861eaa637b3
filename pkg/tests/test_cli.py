import pytest

from circol import generators as gen
from circol.graph import write_edge_list


@pytest.fixture
def graph_file(tmp_path):
    def make(G, name="g.el"):
        path = tmp_path / name
        write_edge_list(G, path)
        return path
    return make


def test_colour_summaries(cli, graph_file):
    code, out, err = cli("colour", "--input", graph_file(gen.path(5)))
    assert code == 0 and "k=2 colours=2 maxcomp=1" in err
    assert out.startswith("c 2\n")
    code, out, err = cli("colour", "--input", graph_file(gen.complete(5)))
    assert code == 0 and "k=5 colours=1 maxcomp=5" in err


def test_colour_with_precolour_and_verify(cli, graph_file, tmp_path):
    g = graph_file(gen.complete(5))
    col = tmp_path / "k5.col"
    code, out, _ = cli("colour", "--input", g, "--precolour", "0:9,1:9", "--output", col)
    assert code == 0 and out.startswith("k=5")
    lines = col.read_text().splitlines()
    assert lines[1:3] == ["0 9", "1 9"]
    code, out, _ = cli("verify", "--input", g, "--colouring", col, "--k", 5, "--precolour", "0:9,1:9")
    assert code == 0 and "R2 PASS" in out


def test_colour_refusals(cli, graph_file):
    g = graph_file(gen.path(4))
    assert cli("colour", "--input", g, "--precolour", "0:1,2:1")[0] == 2
    assert cli("colour", "--input", g, "--precolour", "zero")[0] == 2
    assert cli("colour", "--input", graph_file(gen.cycle(5)), "--k", 4)[0] == 2


def test_colour_trace(cli, graph_file):
    code, _, err = cli("colour", "--input", graph_file(gen.tree_closure(2, 2)), "--trace")
    assert code == 0
    assert "trace 0 separation" in err


def test_io_errors(cli, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("3 1\n0 7\n")
    assert cli("colour", "--input", bad)[0] == 1
    assert cli("circumference", "--input", tmp_path / "missing.el")[0] == 1


def test_verify_failure_and_mismatch(cli, graph_file, tmp_path):
    g = graph_file(gen.cycle(4))
    col = tmp_path / "c.col"
    col.write_text("c 1\n0 0\n1 0\n2 0\n3 0\n")
    code, out, _ = cli("verify", "--input", g, "--colouring", col, "--k", 3)
    assert code == 3 and "R1 FAIL witness 0,1,2,3" in out
    short = tmp_path / "short.col"
    short.write_text("c 1\n0 0\n1 0\n")
    assert cli("verify", "--input", g, "--colouring", short, "--k", 4)[0] == 1


def test_circumference_command(cli, graph_file):
    assert cli("circumference", "--input", graph_file(gen.cycle(5)))[1] == "5\n"
    assert cli("circumference", "--input", graph_file(gen.path(5)))[1] == "2\n"
    code, out, _ = cli("circumference", "--input", graph_file(gen.petersen()), "--witness")
    assert out.splitlines()[0] == "9" and len(out.splitlines()[1].split()) == 9


def test_extremal_command(cli):
    code, out, err = cli("extremal", "--k", 1, "--d", 3, "--check", "all")
    assert code == 0 and out.startswith("4 3\n") and "FAIL" not in err
    code, out, err = cli("extremal", "--k", 2, "--d", 2, "--check", "all", "--jobs", 2)
    assert code == 0 and out.startswith("7 10\n") and err.count("PASS") == 3
    code, _, err = cli("extremal", "--k", 5, "--d", 5, "--check", "colourings")
    assert code == 2 and "enumeration infeasible" in err


def test_bounds_command(cli):
    code, out, _ = cli("bounds", "--kmax", 8)
    assert code == 0
    assert out.splitlines()[1] == "2,3,2,2,3,2,2"
    assert out.splitlines()[-1] == "8,9,5,4,5,4,4"
    assert cli("bounds", "--kmax", 1)[0] == 2


def test_oracle_command(cli, graph_file):
    assert cli("oracle", "--input", graph_file(gen.cycle(5)), "--d", 2)[1] == "2\n"
    assert cli("oracle", "--input", graph_file(gen.complete(4)), "--d", 1)[1] == "4\n"
    assert cli("oracle", "--input", graph_file(gen.star(3)), "--d", 0,
               "--mode", "defective")[1] == "2\n"
    assert cli("oracle", "--input", graph_file(gen.cycle(20)), "--d", 2)[0] == 2


def test_gen_command(cli):
    code, out, _ = cli("gen", "--family", "cycle", "--params", 5)
    assert out == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n"
    first = cli("gen", "--family", "cactus", "--params", "30,7", "--seed", 1)[1]
    assert first == cli("gen", "--family", "cactus", "--params", "30,7", "--seed", 1)[1]
    assert cli("gen", "--family", "treeclosure", "--params", "3,2")[1].startswith("15 ")
    assert cli("gen", "--family", "extremal", "--params", "2,2")[1].startswith("7 10")
    assert cli("gen", "--family", "cycle", "--params", "2")[0] == 2
    assert cli("gen", "--family", "cycle", "--params", "5,6")[0] == 2
