import json
import subprocess
import sys

import pytest

from superfrob.cli import RunConfig, UsageError, emit, main, run
from superfrob.frobenius import HeckeCharTable, Report, char_table
from superfrob.hl import hl_q_row
from superfrob.scalar import Q


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_char_table_json(capsys):
    code, out, _ = _run(["char-table", "--r", "3", "--format", "json"], capsys)
    assert code == 0
    assert HeckeCharTable.from_json(json.loads(out)) == char_table(3)
    assert out.startswith('{"r":3,"columns":[[3],[2,1],[1,1,1]],"rows":[{"lambda":[3],"values":["q^2","q","1"]}')


def test_char_table_roundtrip_r5(capsys):
    _, out, _ = _run(["char-table", "--r", "5", "--format", "json"], capsys)
    assert HeckeCharTable.from_json(json.loads(out)) == char_table(5)


def test_emit_examples():
    assert emit(Report(), "json") == '{"checks":[],"passed":true}'
    assert emit(char_table(1), "csv") == "lambda,(1)\n(1),1\n"
    lines = emit(char_table(2), "text").splitlines()
    assert [l.split()[-2:] for l in lines[1:]] == [["q", "1"], ["-q^-1", "1"]]


def test_verify_frobenius_small(capsys):
    code, out, _ = _run(["verify", "--suite", "frobenius", "--r", "2", "--m", "1", "--n", "1", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True and data["checks"]


def test_expand_q_row(capsys):
    code, out, _ = _run(["expand", "--func", "q_row", "--k", "2", "--t", "q^-2", "--basis", "p"], capsys)
    assert code == 0
    assert out.strip() == str(hl_q_row(2, Q ** -2))


def test_expand_json_and_csv(capsys):
    _, out, _ = _run(["expand", "--func", "P", "--partition", "2", "--basis", "s", "--format", "json"], capsys)
    data = json.loads(out)
    assert data["basis"] == "s"
    assert {tuple(t["partition"]): t["coeff"] for t in data["terms"]} == {(2,): "1", (1, 1): "-q"}
    _, out, _ = _run(["expand", "--func", "s", "--partition", "2,1", "--basis", "p", "--format", "csv"], capsys)
    assert out.splitlines()[0] == "partition,coeff"


def test_trace_json(capsys):
    code, out, _ = _run(["trace", "--k", "2", "--m", "1", "--n", "1", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["xy"]["terms"][0] == {"x": [2], "y": [0], "coeff": "q"}


def test_output_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    code, out, _ = _run(["char-table", "--r", "2", "--format", "csv", "--output", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text() == emit(char_table(2), "csv")


@pytest.mark.parametrize(
    "argv",
    [
        ["char-table"],
        ["char-table", "--r", "0"],
        ["char-table", "--r", "2", "--format", "xml"],
        ["verify", "--suite", "nope"],
        ["expand", "--func", "q_row"],
        ["expand", "--func", "P", "--partition", "a,b"],
        ["expand", "--func", "q_row", "--k", "2", "--t", "x^2"],
        ["trace", "--k", "2", "--m", "0", "--n", "0"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = _run(argv, capsys)
    assert code == 2
    assert err


def test_verification_failure_exit_1(monkeypatch, capsys):
    from superfrob import cli

    def failing(name, cfg):
        rep = Report()
        rep.add("forced", False, "mutated")
        return rep

    monkeypatch.setattr(cli, "run_suite", failing)
    code, out, _ = _run(["verify", "--suite", "frobenius", "--format", "json"], capsys)
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_run_rejects_bad_config():
    with pytest.raises(UsageError):
        run(RunConfig(command="char-table", r=2, jobs=0))
    with pytest.raises(UsageError):
        run(RunConfig(command="launch"))


def test_byte_identical_runs():
    cmd = [sys.executable, "-m", "superfrob.cli", "char-table", "--r", "4", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")
