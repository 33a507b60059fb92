import json

import pytest

from replpath.cli import parse_seed, resolve_seed, run_command


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


@pytest.fixture
def graph_file(tmp_path):
    assert run_command(["gen", "erdos-renyi", "--n", "25", "--p", "0.15", "--seed", "3", "--out", str(tmp_path / "g.txt")]) == 0
    return str(tmp_path / "g.txt")


def test_seed_parsing(monkeypatch):
    assert parse_seed("0x1f") == 31 and parse_seed("12") == 12
    monkeypatch.setenv("REPLANEPATH_SEED", "9")
    assert resolve_seed(None) == 9
    assert resolve_seed("4") == 4
    monkeypatch.delenv("REPLANEPATH_SEED")
    assert resolve_seed(None) == 0


def test_gen_is_seeded(tmp_path, capsys):
    assert run_command(["gen", "grid", "--w", "3", "--h", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "6 7"
    run_command(["gen", "erdos-renyi", "--n", "15", "--p", "0.3", "--seed", "0x10"])
    a = capsys.readouterr().out
    run_command(["gen", "erdos-renyi", "--n", "15", "--p", "0.3", "--seed", "16"])
    assert capsys.readouterr().out == a


def test_ssrp_json_then_verify(graph_file, tmp_path, capsys):
    out = str(tmp_path / "r.json")
    assert run_command(["ssrp", "--graph", graph_file, "--sources", "0,4", "--out", out]) == 0
    records = json.loads(open(out).read())
    assert {r["source"] for r in records} == {0, 4}
    assert set(records[0]) == {"source", "target", "edge", "dist"}
    assert run_command(["verify", "--graph", graph_file, "--results", out]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["checked"] == len(records) and report["mismatches"] == []


def test_verify_detects_corruption(graph_file, tmp_path, capsys):
    out = str(tmp_path / "r.csv")
    assert run_command(["msrp", "--graph", graph_file, "--sigma", "3", "--format", "csv", "--out", out, "--seed", "5"]) == 0
    lines = open(out).read().splitlines()
    assert lines[0] == "source,target,u,v,dist"
    head = lines[1].split(",")
    head[4] = str(int(head[4]) + 1) if head[4] else "1"
    lines[1] = ",".join(head)
    bad = write(tmp_path, "bad.csv", "\n".join(lines) + "\n")
    assert run_command(["verify", "--graph", graph_file, "--results", bad]) == 2
    assert len(json.loads(capsys.readouterr().out)["mismatches"]) == 1


def test_verify_runs_msrp_by_default(graph_file, capsys):
    assert run_command(["verify", "--graph", graph_file, "--sigma", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["checked"] > 0


def test_parallel_matches_serial(graph_file, tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert run_command(["ssrp", "--graph", graph_file, "--sigma", "3", "--out", a]) == 0
    assert run_command(["ssrp", "--graph", graph_file, "--sigma", "3", "--parallel", "2", "--out", b]) == 0
    assert open(a).read() == open(b).read()


def test_bmm(tmp_path, capsys):
    a = write(tmp_path, "a.txt", "3\n100\n010\n001\n")
    b = write(tmp_path, "b.txt", "3\n011\n000\n100\n")
    assert run_command(["bmm", "--a", a, "--b", b, "--sigma", "2"]) == 0
    assert capsys.readouterr().out == "3\n011\n000\n100\n"


def test_bench_reports_counters(capsys):
    assert run_command(["bench", "--n", "60", "--m", "150", "--baseline", "--seed", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 60 and doc["m"] == 150
    assert {"seconds", "counters", "max_far_work_per_target", "baseline_seconds", "baseline_bfs_runs"} <= set(doc)


@pytest.mark.parametrize(
    "argv",
    [
        ["ssrp", "--graph", "/nonexistent/graph.txt"],
        ["gen", "grid", "--w", "3"],
        ["gen", "cycle", "--n", "5", "--seed", "abc"],
        ["nosuch"],
    ],
)
def test_usage_errors_exit_one(argv, capsys):
    assert run_command(argv) == 1


def test_bad_graph_and_sources(tmp_path):
    bad = write(tmp_path, "bad.txt", "3 1\n0 0\n")
    assert run_command(["ssrp", "--graph", bad]) == 1
    good = write(tmp_path, "g.txt", "3 2\n0 1\n1 2\n")
    assert run_command(["ssrp", "--graph", good, "--sources", "7"]) == 1
    assert run_command(["ssrp", "--graph", good, "--sources", "0", "--sigma", "1"]) == 1
    assert run_command(["ssrp", "--graph", good, "--parallel", "0"]) == 1
