from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import k4, path_sat
from planarvit.cli import main
from planarvit.graph_io import write_graph


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in (("path", path_sat()), ("k4", k4())):
        out[name] = str(tmp_path / f"{name}.txt")
        write_graph(g, out[name])
    bad = tmp_path / "bad.txt"
    bad.write_text("graph 3 2\n")
    out["bad"] = str(bad)
    disc = tmp_path / "disc.txt"
    disc.write_text("planar 3 1\ne 0 1\nrot 0 0\nrot 1 0\nrot 2\nst 0 2\n")
    out["disc"] = str(disc)
    return out


def _json(capsys, argv):
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)


def _strip_timing(rep):
    return {k: v for k, v in rep.items() if not k.endswith("_ms")}


def test_vitality_path(files, capsys):
    rep = _json(capsys, ["vitality", files["path"], "--format", "json"])
    assert list(rep) == ["n", "m", "s", "t", "max_flow", "vital_edges", "phase1_ms", "phase2_ms"]
    assert rep["max_flow"] == 1 and rep["vital_edges"] == [0, 1]


def test_vitality_k4_and_oracle_agree(files, capsys):
    a = _json(capsys, ["vitality", files["k4"], "--format", "json", "--bits", "--verify"])
    assert a["max_flow"] == 3 and len(a["vital_edges"]) == 5 and a["verified"] is True
    b = _json(capsys, ["oracle", files["k4"], "--format", "json", "--bits"])
    a.pop("verified")
    assert _strip_timing(a) == _strip_timing(b)


def test_reports_deterministic(files, capsys):
    runs = [_strip_timing(_json(capsys, ["vitality", files["k4"], "--format", "json", "--bits"])) for _ in range(2)]
    assert runs[0] == runs[1]
    assert _strip_timing(_json(capsys, ["vitality", files["k4"], "--format", "json", "--no-compress"])) == {
        k: v for k, v in runs[0].items() if k != "bits"
    }


def test_text_report(files, capsys):
    assert main(["vitality", files["path"]]) == 0
    out = capsys.readouterr().out
    assert "max_flow: 1" in out and "vital_edges: 0 1" in out


def test_exit_codes(files, capsys):
    assert main(["vitality", files["bad"]]) == 2
    assert "header" in capsys.readouterr().err
    assert main(["vitality", files["disc"]]) == 3
    assert main(["oracle", files["k4"], "--oracle-cap", "5"]) == 4
    assert main(["vitality", files["k4"] + ".missing"]) == 2


def test_verify_command(capsys):
    assert main(["verify", "--count", "0"]) == 0
    assert "0 mismatches" in capsys.readouterr().out
    argv = ["verify", "--family", "grid_minus_random_edges", "--count", "12", "--max-n", "60",
            "--delete-fraction", "0,0.1,0.3", "--terminal-rule", "random_distinct"]
    assert main(argv) == 0
    assert main([*argv, "--workers", "2"]) == 0


def test_bench_rows_and_budget(capsys):
    assert main(["bench", "--sizes", "8,16", "--repetitions", "3"]) == 0
    lines = capsys.readouterr().out.split()
    assert lines[0] == "n,m,phase1_ms,phase2_ms,total_ms"
    assert [row.split(",")[:2] for row in lines[1:]] == [["64", "112"], ["256", "480"]]
    assert main(["bench", "--sizes", "64,128,256,512", "--max-vertices", "100000"]) == 4


def test_generate_roundtrip(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["generate", "--family", "stacked_triangulation", "--size", "20", "-o", str(out)]) == 0
    rep = _json(capsys, ["vitality", str(out), "--format", "json", "--verify"])
    assert rep["n"] == 20 and rep["verified"] is True


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "planarvit", "vitality", files["bad"]], capture_output=True, text=True
    )
    assert proc.returncode == 2 and proc.stderr
