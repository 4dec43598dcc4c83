from __future__ import annotations

import json

import pytest

from pantsgraph.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_stats(capsys):
    code, out, _ = run(capsys, "build", "zn", "--n", "6", "--stats")
    assert code == EXIT_OK
    assert out.strip() == '{"vertices":14,"edges":21}'
    code, out, _ = run(capsys, "build", "x5", "--stats")
    assert json.loads(out) == {"vertices": 25, "edges": 55}


def test_build_exports(capsys, tmp_path):
    target = tmp_path / "z5.json"
    assert main(["build", "zn", "--n", "5", "--export", "json", "--out", str(target)]) == EXIT_OK
    data = json.loads(target.read_text())
    assert len(data["vertices"]) == 5
    code, out, _ = run(capsys, "build", "xn", "--n", "6", "--export", "dot")
    assert code == EXIT_OK and out.startswith("graph")


def test_exhaust(capsys):
    code, out, _ = run(capsys, "exhaust", "--n", "5", "--steps", "2")
    assert code == EXIT_OK
    assert [s["vertices"] for s in json.loads(out)["stages"]] == [25, 95, 345]


def test_exhaust_budget(capsys):
    code, _, err = run(capsys, "exhaust", "--n", "5", "--steps", "50")
    assert code == EXIT_BUDGET and "budget" in err.lower()
    code, _, _ = run(capsys, "exhaust", "--n", "5", "--steps", "2", "--budget", "50")
    assert code == EXIT_BUDGET


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PANTSGRAPH_BUDGET", "30")
    code, _, _ = run(capsys, "exhaust", "--n", "5", "--steps", "1")
    assert code == EXIT_BUDGET


def test_verify_single_checks(capsys):
    code, out, _ = run(capsys, "verify", "z5")
    assert code == EXIT_OK and json.loads(out)[0]["outcome"] == "pass"
    code, out, _ = run(capsys, "verify", "restriction", "--n", "6", "--alpha", "1", "3")
    assert code == EXIT_OK
    code, out, _ = run(capsys, "verify", "overlap", "--alpha", "1", "3", "--sign", "-1")
    assert code == EXIT_FAIL
    assert json.loads(out)[0]["witness"]["overlap_vertices"] == 16


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n", "6", "--seed", "2", "--trials", "10")
    assert code == EXIT_OK
    reports = json.loads(out)
    assert all(r["params"]["seed"] == 2 for r in reports)
    code5, out5, _ = run(capsys, "verify", "all", "--n", "5", "--seed", "7")
    again, out5b, _ = run(capsys, "verify", "all", "--n", "5", "--seed", "7")
    assert code5 == again == EXIT_FAIL  # the n = 5 overlap check fails
    assert out5 == out5b


def test_normalize_commands(capsys, tmp_path):
    f = tmp_path / "v.json"
    f.write_text(json.dumps({"n": 6, "chords": [[1, 3], [1, 4], [1, 5]]}))
    code, out, _ = run(capsys, "normalize", "vertex", "--in", str(f))
    assert code == EXIT_OK and len(json.loads(out)["chords"]) == 3
    e = tmp_path / "e.json"
    e.write_text(json.dumps({"n": 6, "p1": {"chords": [[1, 3], [1, 4], [1, 5]]},
                             "p2": {"chords": [[1, 3], [1, 4], [4, 6]]}}))
    code, out, _ = run(capsys, "normalize", "edge", "--in", str(e))
    assert code == EXIT_OK and json.loads(out)["twists"] == 0


def test_orbit_check(capsys):
    code, out, _ = run(capsys, "orbit-check", "--n", "5", "--trials", "15", "--seed", "1")
    assert code == EXIT_OK and json.loads(out)["outcome"] == "pass"


def test_farey_and_stats(capsys):
    code, out, _ = run(capsys, "farey-exhaust", "--steps", "3")
    assert code == EXIT_OK
    assert [s["vertices"] for s in json.loads(out)["stages"]] == [3, 6, 12, 24]
    code, out, _ = run(capsys, "stats", "x5")
    info = json.loads(out)
    assert info["triangles"] == 20 and info["connected"] is True
    code, out, _ = run(capsys, "export", "zn", "--n", "5", "--format", "dot")
    assert code == EXIT_OK and out.count(" -- ") == 5


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["build", "zn"],
    ["build", "x5", "--n", "6"],
    ["verify", "restriction", "--n", "6"],
    ["exhaust", "--n", "5", "--steps", "-1"],
    ["build", "zn", "--n", "2"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err


def test_malformed_json(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"n": 5,\n  "chords": [[1, 3]')
    code, _, err = run(capsys, "normalize", "vertex", "--in", str(f))
    assert code == EXIT_USAGE and "line 2" in err
    code, _, err = run(capsys, "normalize", "vertex", "--in", str(tmp_path / "missing.json"))
    assert code == EXIT_USAGE
