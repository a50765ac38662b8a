import json
import subprocess
import sys

import pytest

from orient.cli import main, run_classify, run_classify_map


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "0,1,0,1")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"command", "config", "result", "version"}
    assert doc["command"] == "classify"
    r = doc["result"]
    assert r["orientation"] == "none"
    assert r["rank"] == 2
    assert r["cyclic_descents"] == r["cyclic_ascents"] == 2
    assert r["predicted_from_triples"] == "both"
    assert r["determined_by_triples"] is False


def test_classify_plain(capsys):
    assert run(capsys, "classify", "0,1,0,1", "--format", "plain")[1] == "orientationSort.none\n"


def test_classify_empty():
    r = run_classify("")
    assert r["orientation"] == "both" and r["rank"] == 0
    assert "determined_by_triples" not in r


def test_classify_parse_error(capsys):
    code, out, err = run(capsys, "classify", "0,1,x")
    assert code == 1 and out == ""
    assert "position 3" in err


def test_classify_map():
    r = run_classify_map("1,2,3,0")
    assert r["orientation_preserving"] is True and r["orientation"] == "cyclic"
    r = run_classify_map("0,1,0,1")
    assert r["orientation_preserving"] is False and r["orientation_reversing"] is False


def test_classify_map_out_of_range(capsys):
    assert run(capsys, "classify-map", "0,4")[0] == 1
    assert run(capsys, "classify-map", "")[0] == 1


def test_classify_csv(capsys):
    _, out, _ = run(capsys, "classify", "1,2,3,0", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].startswith("sequence,orientation,rank")
    assert lines[1] == '"1,2,3,0",cyclic,4,1,3,cyclic,True'


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4")
    r = json.loads(out)["result"]
    assert code == 0 and r["total"] == 256
    assert sum(r["counts"].values()) == 256
    assert r["samples"]["none"][0] == [0, 1, 0, 1]
    code, out, _ = run(capsys, "enumerate", "2", "--format", "plain")
    assert out == "n=2 total=4 none=0 cyclic=0 anticyclic=0 both=4\n"


def test_enumerate_csv_one_row_per_mapping(capsys):
    _, out, _ = run(capsys, "enumerate", "3", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "mapping,orientation,rank"
    assert len(lines) == 1 + 27


def test_enumerate_budget(capsys):
    code, _, err = run(capsys, "enumerate", "8")
    assert code == 2 and str(8**8) in err


def test_budget_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("ORIENT_BUDGET", "10")
    assert run(capsys, "enumerate", "3")[0] == 2
    assert run(capsys, "enumerate", "3", "--budget", "100")[0] == 0
    monkeypatch.setenv("ORIENT_BUDGET", "lots")
    assert run(capsys, "enumerate", "3")[0] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "4", "2")
    r = json.loads(out)["result"]
    assert code == 0 and r["violations"] == []
    assert [0, 1, 0, 1] in r["counterexamples"]


def test_verify_usage(capsys):
    assert run(capsys, "verify", "2", "2")[0] == 1
    assert run(capsys, "verify", "x", "2")[0] == 1
    assert run(capsys, "verify", "5", "3", "--budget", "10")[0] == 2


def test_verify_violation_exit_code(capsys, monkeypatch):
    import orient.cli as cli

    monkeypatch.setattr(cli, "run_verify", lambda *a: {"violations": [[0, 1, 2]], "counterexamples": [], "checked": 1})
    assert run(capsys, "verify", "3", "3", "--format", "plain")[0] == 4


def test_counterexamples(capsys):
    code, out, _ = run(capsys, "counterexamples", "4", "2")
    items = json.loads(out)["result"]["items"]
    assert {"sequence": [0, 1, 0, 1], "predicted": "both", "actual": "none"} in items
    for argv in (("3", "5"), ("4", "1")):
        _, out, _ = run(capsys, "counterexamples", *argv)
        assert json.loads(out)["result"]["items"] == []


def test_closure_check(capsys):
    code, out, _ = run(capsys, "closure-check", "3", "2", "--format", "plain")
    assert code == 0 and out == "checked=14 violations=0 counterexamples=0\n"


def test_json_excludes_jobs(capsys):
    _, a, _ = run(capsys, "verify", "5", "3", "--jobs", "1")
    _, b, _ = run(capsys, "verify", "5", "3", "--jobs", "3")
    assert a == b


def test_no_command_is_usage_error(capsys):
    assert main([]) == 1
    assert main(["--version"]) == 0


def test_console_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "orient.cli", "classify", "0,1,0,1", "--format", "plain"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "orientationSort.none\n"
