from __future__ import annotations

import json
import subprocess
import sys

import pytest

from gtalg.cli import main
from gtalg.goldman_turaev import schedler_delta
from gtalg.tensor import parse_word
from gtalg.twist import circle, figure_eight


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip().startswith("{") else out.out), out.err


def test_schedler(capsys):
    code, rep, _ = run(capsys, "schedler", "--genus", "2", "--word", "a1a2b1b2")
    assert code == 0 and rep["status"] == "value"
    assert rep["result"] == schedler_delta(parse_word("a1a2b1b2"), 2).to_json()
    code, rep, _ = run(capsys, "schedler", "--genus", "1", "--word", "a1b1")
    assert code == 0 and rep["result"]["terms"] == []


def test_parse_errors(capsys):
    assert run(capsys, "schedler", "--genus", "1", "--word", "a3b1")[0] == 2
    assert run(capsys, "verify", "nosuch")[0] == 2
    assert run(capsys, "schedler")[0] == 2


def test_value_commands(capsys):
    for args in (["mu-alg", "--genus", "2", "--word", "a1a2b1"], ["mu0", "--word", "a1b1"],
                 ["trace", "--genus", "2", "--word", "a1b1a2b2"], ["bracket", "--word1", "a1a1", "--word2", "b1b1"],
                 ["series", "obstruction", "--order", "4"]):
        code, rep, _ = run(capsys, *args)
        assert code == 0, args
        assert rep["command"] == args[0]


def test_verify_suites(capsys):
    code, rep, _ = run(capsys, "verify", "fn", "--max-n", "12")
    assert code == 0 and rep["status"] == "pass"
    code, rep, _ = run(capsys, "verify", "mu-zero", "--genus", "2", "--max-degree", "4")
    assert code == 0
    code, rep, _ = run(capsys, "verify", "bialgebra", "--genus", "1", "--max-degree", "5")
    assert code == 0
    code, rep, _ = run(capsys, "verify", "obstruction-corpus", "--n", "30", "--jobs", "2")
    assert code == 0 and rep["result"]["checked"] == 30


def test_verify_trace_reports_failure(capsys):
    code, rep, _ = run(capsys, "verify", "54trace", "--genus", "2", "--m", "3", "--mode", "random", "--n", "20")
    assert code == 1 and rep["status"] == "fail"
    assert rep["result"]["observed_ratios"] == ["6/1"]


def test_obstruction_files(tmp_path, capsys):
    fe = tmp_path / "fe.json"
    fe.write_text(json.dumps(figure_eight().to_json()))
    code, rep, _ = run(capsys, "obstruction", str(fe))
    assert code == 0 and rep["result"]["verdict"] == "OBSTRUCTED"
    ci = tmp_path / "circle.json"
    ci.write_text(json.dumps(circle().to_json()))
    code, rep, _ = run(capsys, "obstruction", str(ci))
    assert code == 0 and rep["result"]["verdict"] == "NO_OBSTRUCTION_FOUND"
    bad = tmp_path / "bad.json"
    data = figure_eight().to_json()
    data["signs"] = {}
    bad.write_text(json.dumps(data))
    assert run(capsys, "obstruction", str(bad))[0] == 2
    assert run(capsys, "obstruction", str(tmp_path / "missing.json"))[0] == 2


def test_byte_stable_with_seed(capsys):
    args = ["--no-timing", "verify", "54trace", "--genus", "2", "--m", "5", "--mode", "random", "--n", "10", "--seed", "4"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_jobs_do_not_change_output(capsys):
    base = ["--no-timing", "verify", "obstruction-corpus", "--n", "24", "--seed", "2"]
    main(base + ["--jobs", "1"])
    one = json.loads(capsys.readouterr().out)
    main(base + ["--jobs", "3"])
    three = json.loads(capsys.readouterr().out)
    one["inputs"].pop("jobs"), three["inputs"].pop("jobs")
    assert one == three


def test_text_output(capsys):
    assert main(["--output", "text", "series", "s", "--order", "3"]) == 0
    assert "1/12" in capsys.readouterr().out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "gtalg", "series", "h", "--order", "2"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["command"] == "series"
