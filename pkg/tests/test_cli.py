import json

import pytest

from supercolor.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    reports = [json.loads(line) for line in out.splitlines() if line]
    return code, (reports[-1] if reports else None)


@pytest.fixture
def tri_path(tmp_path):
    p = tmp_path / "tri.json"
    p.write_text(json.dumps({
        "graph": {"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]},
        "k": 3,
        "c": [2, 2, 2],
    }))
    return p


def test_check_ok(capsys, tri_path):
    code, report = run(capsys, "check", str(tri_path))
    assert code == 0
    assert report["verdict"] == "ok"


def test_check_violation_names_edge(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({
        "graph": {"n": 2, "edges": [[0, 1]]},
        "k": 1,
        "c": [1, 1],
    }))
    code, report = run(capsys, "check", str(p))
    assert code == 1
    assert report["verdict"] == "violation"
    assert any("edge 0" in line for line in report["violations"])


def test_solve_edge_then_verify(capsys, tri_path, tmp_path):
    out = tmp_path / "col.json"
    code, report = run(capsys, "solve", "edge", str(tri_path), "-o", str(out))
    assert code == 0
    assert report["witness"] == str(out)
    colors = json.loads(out.read_text())["colors"]
    assert len(colors) == 3 and all(1 <= c <= 3 for c in colors)
    code, report = run(capsys, "verify", str(tri_path), str(out))
    assert code == 0 and report["verdict"] == "ok"


def test_verify_tampered_coloring(capsys, tri_path, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colors": [1, 1, 1]}))
    code, report = run(capsys, "verify", str(tri_path), str(bad))
    assert code == 1
    assert report["violating_vertices"] == [0, 1, 2]


def test_solve_infeasible_hypotheses_exit_one(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({
        "graph": {"n": 2, "edges": [[0, 1]]}, "k": 1, "c": [1, 1]}))
    code, report = run(capsys, "solve", "edge", str(p))
    assert code == 1
    assert report["verdict"] == "violation"


def test_malformed_json_exit_two(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    code, report = run(capsys, "check", str(p))
    assert code == 2
    assert "line" in report["error"]


def test_missing_file_exit_two(capsys, tmp_path):
    code, _ = run(capsys, "check", str(tmp_path / "nope.json"))
    assert code == 2


def test_reduce_then_supermodular_chain(capsys, tri_path, tmp_path):
    fam = tmp_path / "fam.json"
    code, _ = run(capsys, "reduce", "stars", str(tri_path), "-o", str(fam))
    assert code == 0
    obj = json.loads(fam.read_text())
    assert obj["ground"] == 3 and len(obj["sets"]) == 3
    col = tmp_path / "fam.col.json"
    code, _ = run(capsys, "solve", "supermodular", str(fam), "-o", str(col))
    assert code == 0
    code, report = run(capsys, "verify", str(fam), str(col))
    assert code == 0 and report["verdict"] == "ok"


def test_brute_force_exit_codes(capsys, tri_path, tmp_path):
    code, report = run(capsys, "brute-force", str(tri_path))
    assert code == 0 and report["verdict"] == "feasible"
    infeasible = tmp_path / "inf.json"
    infeasible.write_text(json.dumps({
        "ground": 3, "k": 2, "sets": [[0, 1, 2]], "g": [3]}))
    code, report = run(capsys, "brute-force", str(infeasible))
    assert code == 1 and report["verdict"] == "infeasible"


def test_gen_demand_roundtrip(capsys, tmp_path):
    inst = tmp_path / "inst.json"
    code, _ = run(capsys, "gen", "demand", "--n", "5", "--m", "8", "--k", "3",
                  "--seed", "4", "-o", str(inst))
    assert code == 0
    code, _ = run(capsys, "check", str(inst))
    assert code == 0
    code, _ = run(capsys, "solve", "edge", str(inst), "-o", str(tmp_path / "c.json"))
    assert code == 0


def test_gen_family_stdout(capsys):
    code, report = run(capsys, "gen", "family", "--ground", "5", "--k", "2",
                       "--shape", "laminar", "--seed", "3")
    assert code == 0
    assert report["instance"]["ground"] == 5


def test_solve_gupta_on_bare_graph(capsys, tmp_path):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"n": 3, "edges": [[0, 1], [0, 1], [1, 2], [1, 2], [2, 0], [2, 0]]}))
    col = tmp_path / "col.json"
    code, _ = run(capsys, "solve", "gupta", str(g), "--k", "3", "-o", str(col))
    assert code == 0
    code, report = run(capsys, "verify", str(g), str(col), "--gupta", "--k", "3")
    assert code == 0 and report["verdict"] == "ok"


def test_solve_gupta_bare_graph_requires_k(capsys, tmp_path):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"n": 2, "edges": [[0, 1]]}))
    code, _ = run(capsys, "solve", "gupta", str(g))
    assert code == 2


def test_trace_emits_json_lines(capsys, tri_path):
    code = main(["solve", "edge", str(tri_path), "--trace", "-o", "-"])
    captured = capsys.readouterr()
    assert code == 0
    events = [json.loads(line) for line in captured.err.splitlines()
              if line.startswith("{")]
    assert any("event" in e for e in events)


def test_each_batch(capsys, tmp_path):
    for i, k in enumerate((3, 1)):
        (tmp_path / f"inst{i}.json").write_text(json.dumps({
            "graph": {"n": 2, "edges": [[0, 1]]}, "k": k, "c": [1, 1]}))
    code = main(["check", str(tmp_path / "inst0.json"), "--each", str(tmp_path)])
    out = capsys.readouterr().out
    reports = [json.loads(line) for line in out.splitlines() if line]
    assert code == 1  # worst exit across the batch
    assert len(reports) == 2
    verdicts = {r["verdict"] for r in reports}
    assert verdicts == {"ok", "violation"}


def test_usage_error_exit_two(capsys):
    assert main(["solve", "nonsense", "x.json"]) == 2
