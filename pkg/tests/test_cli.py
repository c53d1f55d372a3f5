"""Command-line behaviour: outputs, exit codes, file formats."""

import json
import os
import subprocess
import sys

import pytest

from surfclass.cli import main

from conftest import KLEIN_TAPE

KLEIN_COVER_TAPE = ("# 10 (13) 110 (12) 11 (32) "
                    "# 11 (13) - 1 (21) "
                    "# 100 (23) 1 (13) 10 (21) "
                    "# 101 (13) 11 (12) 110 (32) "
                    "# 110 (13) - 100 (21) "
                    "# 1 (23) 100 (13) 101 (21)")


@pytest.fixture
def klein_file(tmp_path):
    path = tmp_path / "klein.tri"
    path.write_text(KLEIN_TAPE + "\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def bad_file(tmp_path):
    path = tmp_path / "bad.tri"
    path.write_text("# 10 (12) - - # - - -\n", encoding="utf-8")
    return str(path)


def test_check_ok(klein_file, capsys):
    assert main(["check", klein_file]) == 0
    assert capsys.readouterr().out == ""


def test_check_reports_violations(bad_file, capsys):
    assert main(["check", bad_file]) == 1
    out = capsys.readouterr().out
    assert "AsymmetricGluing t=1 e=12:" in out
    assert "BoundaryReferenced t=2 e=12:" in out


def test_classify_output(klein_file, capsys):
    assert main(["classify", klein_file]) == 0
    out = capsys.readouterr().out
    assert out == "o=1 chi=-1 b=1 name=Klein bottle with 1 boundary component\n"


def test_classify_empty(tmp_path, capsys):
    empty = tmp_path / "empty.tri"
    empty.write_text("\n", encoding="utf-8")
    assert main(["classify", str(empty)]) == 0
    assert capsys.readouterr().out == ""


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "syntax.tri"
    bad.write_text("# 10 (12) - -\n", encoding="utf-8")
    assert main(["check", str(bad)]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["classify", "/nonexistent/file.tri"]) == 2


def test_homeomorphic_yes_no(klein_file, tmp_path, capsys):
    assert main(["homeomorphic", klein_file, klein_file]) == 0
    assert capsys.readouterr().out == "Yes\n"
    torus = tmp_path / "torus.tri"
    assert main(["generate", "--family", "orientable", "--genus", "1",
                 "-o", str(torus)]) == 0
    assert main(["homeomorphic", klein_file, str(torus)]) == 1
    assert capsys.readouterr().out == "No\n"


def test_homeomorphic_identifies_bad_input(klein_file, bad_file, capsys):
    assert main(["homeomorphic", klein_file, bad_file]) == 1
    err = capsys.readouterr().err
    assert "second input is not a surface" in err


def test_double_cover_golden(klein_file, capsys):
    assert main(["double-cover", klein_file]) == 0
    assert capsys.readouterr().out.strip() == KLEIN_COVER_TAPE


def test_graph_output(klein_file, capsys):
    assert main(["graph", "--kind", "K", klein_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "v 9"
    assert lines[1:] == ["e 1 4", "e 1 8", "e 2 6", "e 2 7",
                         "e 3 8", "e 3 9", "e 4 7", "e 5 9"]
    assert main(["graph", "--kind", "Kprime", klein_file]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 10
    assert main(["graph", "--kind", "dual", klein_file]) == 0
    assert capsys.readouterr().out.splitlines() == \
        ["v 3", "e 1 2", "e 1 3", "e 2 3"]


def test_generate_then_classify(tmp_path, capsys):
    out = tmp_path / "surface.tri"
    assert main(["generate", "--family", "nonorientable", "--genus", "3",
                 "--punctures", "2", "--subdivide", "2", "--relabel",
                 "--seed", "5", "-o", str(out)]) == 0
    assert main(["classify", str(out)]) == 0
    line = capsys.readouterr().out.strip()
    assert line.startswith("o=1 chi=-3 b=2")


def test_generate_union(tmp_path, capsys):
    assert main(["generate", "--union", "orientable:1,disk,moebius"]) == 0
    tape = capsys.readouterr().out.strip()
    path = tmp_path / "union.tri"
    path.write_text(tape + "\n", encoding="utf-8")
    assert main(["classify", str(path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [line.split(" name=")[0] for line in lines] == \
        ["o=0 chi=0 b=0", "o=0 chi=1 b=1", "o=1 chi=0 b=1"]


def test_metered_space_report(klein_file, tmp_path, capsys):
    report_path = tmp_path / "space.json"
    assert main(["classify", klein_file, "--engine", "metered",
                 "--space-report", str(report_path)]) == 0
    report = json.loads(report_path.read_text())
    assert set(report) == {"input_symbols", "budget_bits", "peak_bits",
                           "input_reads"}
    assert report["input_symbols"] == 25
    assert 0 < report["peak_bits"] <= report["budget_bits"]
    capsys.readouterr()


def test_budget_exceeded_exit(klein_file, capsys):
    assert main(["classify", klein_file, "--engine", "metered",
                 "--budget-bits", "8"]) == 2
    assert "budget" in capsys.readouterr().err


def test_metered_unionfind_rejected(klein_file, capsys):
    assert main(["classify", klein_file, "--engine", "metered",
                 "--oracle", "unionfind"]) == 2


def test_derand_unavailable(klein_file, capsys):
    assert main(["classify", klein_file, "--oracle", "derand",
                 "--engine", "metered"]) == 2


def test_bench_space_writes_reports(tmp_path, capsys):
    out_dir = tmp_path / "bench"
    assert main(["bench-space", "--out-dir", str(out_dir),
                 "--sizes", "8,16", "--engine", "metered"]) == 0
    for n in (8, 16):
        report = json.loads((out_dir / f"space-n{n}.json").read_text())
        assert set(report) == {"input_symbols", "budget_bits", "peak_bits",
                               "input_reads"}
        assert report["peak_bits"] <= report["budget_bits"]
    capsys.readouterr()


def test_console_entry_point(klein_file):
    env = dict(os.environ)
    env["PYTHONPATH"] = os.pathsep.join(
        [os.path.join(os.path.dirname(__file__), "..", "src"),
         env.get("PYTHONPATH", "")])
    result = subprocess.run(
        [sys.executable, "-m", "surfclass.cli", "invariants", klein_file],
        capture_output=True, text=True, env=env)
    assert result.returncode == 0
    assert result.stdout.startswith("o=1 chi=-1 b=1")
