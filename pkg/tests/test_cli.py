import json

import pytest

from cli import main


def _run(capsys, *argv):
    code = main([*argv, "--log", "-"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def _square(tmp_path, capsys):
    path = tmp_path / "square.json"
    code, _ = _run(capsys, "gen", "--fixture", "square", "--out", str(path))
    assert code == 0
    return path


def test_gen_grid_and_fixture(tmp_path, capsys):
    code, report = _run(capsys, "gen", "--dim", "2", "--side", "4", "--out", str(tmp_path / "g.json"))
    assert code == 0
    assert report["results"]["points"] == 25
    code, report = _run(capsys, "gen", "--fixture", "triangle_Z3", "--out", str(tmp_path / "t.json"))
    assert report["results"]["points"] == 3
    code, report = _run(capsys, "gen", "--dim", "1", "--side", "6", "--scale", "1/2", "--out", str(tmp_path / "l.json"))
    assert report["results"] == {"kind": "points", "points": 7, "dimension": 1, "out": str(tmp_path / "l.json")}
    data = json.loads((tmp_path / "l.json").read_text())
    assert data["points"][1] == ["1/2"]


def test_classify_square(tmp_path, capsys):
    path = _square(tmp_path, capsys)
    code, report = _run(capsys, "classify", "--input", str(path))
    assert code == 0
    classes = report["results"]["classes"]
    assert [(c["squared_distance"], c["pairs"]) for c in classes] == [("1", 4), ("2", 2)]
    assert report["inputs"]["input"].startswith("sha256:")


def test_graph_edges_and_unrealized(tmp_path, capsys):
    path = _square(tmp_path, capsys)
    out = tmp_path / "g.col"
    code, report = _run(capsys, "graph", "--input", str(path), "--forbid", "1,2", "--out", str(out))
    assert code == 0
    assert report["results"]["edges"] == 6
    assert out.read_text().count("\ne ") == 6
    code, report = _run(capsys, "graph", "--input", str(path), "--forbid", "7", "--out", str(out))
    assert report["results"]["edges"] == 0
    assert report["results"]["unrealized"] == ["7"]
    code, report = _run(capsys, "graph", "--fixture", "square", "--classes", "1", "--out", str(out))
    assert report["results"]["edges"] == 4


def test_chroma_modes(tmp_path, capsys):
    k3 = tmp_path / "k3.col"
    k3.write_text("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n")
    code, report = _run(capsys, "chroma", "--graph", str(k3))
    assert code == 0
    assert report["results"]["chi"] == 3
    code, report = _run(capsys, "chroma", "--graph", str(k3), "--brute")
    assert report["results"]["chi"] == 3
    code, report = _run(capsys, "chroma", "--graph", str(k3), "--bipartite")
    assert report["results"]["bipartite"] is False
    assert sorted(report["results"]["odd_cycle"]) == [0, 1, 2]


def test_chroma_bipartite_grid_with_svg(tmp_path, capsys):
    points = tmp_path / "grid.json"
    graph = tmp_path / "grid.col"
    svg = tmp_path / "grid.svg"
    _run(capsys, "gen", "--dim", "2", "--side", "3", "--out", str(points))
    _run(capsys, "graph", "--input", str(points), "--forbid", "1", "--out", str(graph))
    code, report = _run(capsys, "chroma", "--graph", str(graph), "--bipartite", "--points", str(points), "--svg", str(svg))
    assert code == 0
    assert report["results"]["bipartite"] is True
    assert svg.read_text().lstrip().startswith("<?xml")


def test_corrupt_dimacs_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 3 2\ne 1 2\n")
    assert main(["chroma", "--graph", str(bad), "--log", "-"]) == 1


def test_linecolor(capsys):
    code, report = _run(capsys, "linecolor", "--s1", "1", "--s2", "2", "--query", "0")
    assert code == 0
    assert report["results"]["color"] == "red"
    code, report = _run(capsys, "linecolor", "--s1", "2", "--s2", "3", "--verify", "--samples", "200", "--range", "30")
    assert code == 0
    assert report["results"]["violations"] == []
    assert main(["linecolor", "--s1", "3", "--s2", "2", "--query", "0", "--log", "-"]) == 1
    assert main(["linecolor", "--s1", "0.5", "--s2", "2", "--query", "0", "--log", "-"]) == 1


def test_linecolor_huge_range(capsys):
    code, report = _run(
        capsys, "linecolor", "--s1", "40000000000000000000", "--s2", "90000000000000000000",
        "--verify", "--samples", "50", "--range", "100000000000000000000",
    )
    assert code == 0
    assert report["results"]["violations"] == []
    code, _ = _run(capsys, "linecolor", "--s1", "1", "--s2", "2", "--verify", "--range", "100000000000000000000")
    assert code == 1


def test_usage_errors_exit_one():
    with pytest.raises(SystemExit) as info:
        main(["chroma"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["gen", "--dim", "2", "--fixture", "square", "--out", "x.json"])
    assert info.value.code == 1


def test_product_kdist_parity(tmp_path, capsys):
    code, report = _run(
        capsys, "product", "--fixture", "square", "--forbid1", "1", "--forbid2", "2"
    )
    assert code == 0
    assert report["results"]["color_count"] == 4
    assert [f["method"] for f in report["results"]["factors"]] == ["bipartition", "bipartition"]
    code, report = _run(capsys, "kdist", "--fixture", "hypercube(3)", "--k", "3")
    assert code == 0
    assert report["results"]["size"] == 8
    code, report = _run(capsys, "parity", "--p", "1", "--q", "1", "--c-max", "5", "--check", "7,1,5", "--distance", "10")
    assert code == 0
    assert [7, 1, 5] in report["results"]["solutions"]
    assert report["results"]["check"]["all_odd"] is True
    assert report["results"]["distance"]["kind"] == "twice_odd_ratio"
    assert main(["parity", "--p", "2", "--q", "1", "--c-max", "5", "--log", "-"]) == 1


def test_report_writes_ledger(tmp_path, capsys):
    out = tmp_path / "ledger.json"
    code, report = _run(capsys, "report", "--fixture", "johnson(3,2)", "--k", "2", "--out", str(out))
    assert code == 0
    assert report["results"]["concluded"] == 6
    assert json.loads(out.read_text())["concluded"] == 6


def test_verify_paper_exit_codes(tmp_path, capsys):
    db = tmp_path / "runs.db"
    code, report = _run(capsys, "verify-paper", "--only", "odd_parity_lemma", "--db", str(db))
    assert code == 0
    assert report["results"]["all_passed"] is True
    code, report = _run(capsys, "verify-paper", "--budget", "0", "--only", "cubic_lattice_triangle")
    assert code == 2
    assert report["results"]["claims"][0]["status"] == "budget"
    code, _ = _run(capsys, "verify-paper", "--only", "odd_parity_lemma,nope")
    assert code == 1


def test_verify_paper_accepts_claim_alias(capsys):
    code, report = _run(capsys, "verify-paper", "--only", "prop5c")
    assert code == 0
    assert [c["claim"] for c in report["results"]["claims"]] == ["plane_two_distance_value"]


def test_kdist_budget_exit_code(capsys):
    code, report = _run(capsys, "kdist", "--fixture", "hypercube(4)", "--k", "2", "--budget", "1")
    assert code == 2
    assert report["results"]["optimal"] is False


def test_identical_runs_give_identical_results(tmp_path, capsys):
    argv = ["report", "--fixture", "square", "--k", "2", "--seed", "4"]
    _, first = _run(capsys, *argv)
    _, second = _run(capsys, *argv)
    assert first["results"] == second["results"]
    assert first["exit_code"] == second["exit_code"] == 0


def test_run_is_stored(tmp_path, capsys):
    from orchestrator.storage import SQLiteStorage

    db = tmp_path / "runs.db"
    _run(capsys, "parity", "--distance", "3/4", "--db", str(db))
    storage = SQLiteStorage(str(db))
    runs = storage.iter_runs()
    storage.close()
    assert len(runs) == 1
    assert runs[0][1].results["distance"]["kind"] == "odd_ratio"
