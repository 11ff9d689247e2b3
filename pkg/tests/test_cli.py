import json
import subprocess
import sys

import pytest

from graphyps.cli import main
from graphyps.families import wheel, zigzag
from graphyps.graph import Graph


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def shell(*argv, stdin=None):
    return subprocess.run([sys.executable, "-m", "graphyps.cli", *argv], input=stdin,
                          capture_output=True, text=True)


@pytest.fixture
def graph_file(tmp_path):
    def make(g, name="g.json"):
        p = tmp_path / name
        p.write_text(json.dumps(g.to_json()))
        return str(p)
    return make


def test_family_pipe_pld():
    fam = shell("family", "ws", "3")
    assert fam.returncode == 0
    res = shell("pld", "-", stdin=fam.stdout)
    assert res.returncode == 0
    assert json.loads(res.stdout) == {"pld": True, "witness": None}


def test_unknown_subcommand_is_usage_error():
    res = shell("frobnicate")
    assert res.returncode == 2 and "usage" in res.stderr


def test_missing_argument_is_usage_error(capsys):
    assert main(["period"]) == 2


def test_domain_error_exit_one(capsys, graph_file):
    tri = Graph(3, [(0, 1), (1, 2), (2, 0)])
    code, out, err = run(["period", graph_file(tri), "--samples", "100", "--seed", "0"], capsys)
    assert code == 1 and out == "" and "diverges" in err


def test_bad_graph_file(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    code, out, err = run(["betti", str(p)], capsys)
    assert code == 1 and "error" in err


def test_unknown_family(capsys):
    code, _, err = run(["family", "nosuch"], capsys)
    assert code == 1


def test_betti(capsys, graph_file):
    code, out, _ = run(["betti", graph_file(wheel(4))], capsys)
    assert code == 0 and json.loads(out) == {"betti": 4, "components": 1, "edges": 8,
                                             "vertices": 5}


def test_classify_five_loops(capsys):
    code, out, _ = run(["classify", "--loops", "5"], capsys)
    reps = json.loads(out)
    assert code == 0 and len(reps) == 4
    assert sorted(r["label"] for r in reps) == ["ST5", "WS5", "XX5", "ZZ5"]


def test_classify_six_needs_flag(capsys):
    assert run(["classify", "--loops", "6"], capsys)[0] == 1


def test_psi_det_trees_byte_equal(capsys, graph_file):
    f = graph_file(zigzag(5))
    _, det, _ = run(["psi", f, "--det"], capsys)
    _, trees, _ = run(["psi", f, "--trees"], capsys)
    assert det == trees and det.endswith("\n")


def test_psi_ab_coords(capsys, graph_file):
    code, out, _ = run(["psi", graph_file(zigzag(5)), "--paper-coords"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["names"][:2] == ["A0", "A1"]
    code, _, err = run(["psi", graph_file(wheel(5)), "--paper-coords"], capsys)
    assert code == 1


def test_glue(capsys, graph_file):
    f = graph_file(wheel(3))
    code, out, _ = run(["glue", f, "0", f, "0"], capsys)
    g = Graph.from_json(out)
    assert code == 0 and g.num_edges == 10 and g.vertex_count == 6


def test_identities_selftest(capsys):
    code, out, _ = run(["identities", "selftest", "--sizes", "2..4", "--trials", "5"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["all_passed"]


def test_count_with_fit(capsys, graph_file):
    code, out, _ = run(["count", graph_file(wheel(3)), "--q", "2,3,5,7,11", "--fit",
                        "--holdout", "13", "--id", "WS3"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert [r["projective_count"] for r in doc["records"][:2]] == [35, 130]
    assert doc["fit"]["coefficients"] == ["1", "1", "2", "1", "1"]
    assert doc["holdout"]["predicted"] is True
    assert "wall_time" not in doc["records"][0]


def test_count_budget(capsys, graph_file):
    code, _, err = run(["count", graph_file(wheel(5)), "--q", "101"], capsys)
    assert code == 1 and "budget" in err


def test_count_nonprime(capsys, graph_file):
    assert run(["count", graph_file(wheel(3)), "--q", "4"], capsys)[0] == 1


def test_period_json(capsys, graph_file):
    code, out, _ = run(["period", graph_file(wheel(3)), "--samples", "5000", "--seed", "3",
                        "--chart", "0"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["chart"] == 0 and doc["samples"] == 5000


@pytest.mark.parametrize("argv", [
    ["family", "gzz", "2", "2"],
    ["classify", "--loops", "4"],
    ["identities", "selftest", "--sizes", "2..3", "--trials", "3", "--seed", "4"],
])
def test_byte_stable(capsys, argv):
    a = run(argv, capsys)
    b = run(argv, capsys)
    assert a == b and a[0] == 0
