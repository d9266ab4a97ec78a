import json
import subprocess
import sys

import pytest

from ranklevel import cli, suites
from ranklevel.cli import run


def out_of(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


def usage_error(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    return exc.value.code, capsys.readouterr().err


def test_dim(capsys):
    assert out_of(capsys, ["dim", "--rank", "2", "--level", "1", "--genus", "2"]) == (0, "4\n")
    code, out = out_of(capsys, ["dim", "-r", "12", "-l", "1", "-g", "3", "7", "11", "6"])
    assert out.strip() == "1728"
    code, out = out_of(capsys, ["dim", "-r", "3", "-l", "2", "1,0", "0,1", "--format", "json"])
    payload = json.loads(out)
    assert payload["schema"] == cli.SCHEMA and payload["dim"] == "1"


def test_dim_oracle(capsys):
    code, out = out_of(capsys, ["dim", "-r", "2", "-l", "2", "-g", "2", "--oracle"])
    first, second = out.splitlines()
    assert first == "10" and abs(float(second.split()[1]) - 10) < 1e-6


def test_young_table(capsys):
    code, out = out_of(capsys, ["young", "--rank", "3", "--level", "4", "--diagram", "6,4,3",
                                "--show", "all", "--format", "json"])
    table = {row["name"]: row for row in json.loads(out)["table"]}
    assert table["Y^t"]["rows"] == [4, 4, 3, 2]
    assert table["Y^dag"]["rows"] == [5, 4, 2]
    assert table["(Y^dag)^t"]["rows"] == [4, 3, 2, 2]
    assert table["Y"]["pi"]["labels"] == [2, 1]
    assert table["Y^t"]["pi"]["labels"] == [0, 1, 1]
    assert [table[k]["size"] for k in table] == [1, 1, 11, 11]


def test_young_listing(capsys):
    code, out = out_of(capsys, ["young", "-r", "2", "-l", "2", "--size-class", "0"])
    assert out.splitlines()[0].startswith("(0,0)")
    assert len(out.splitlines()) == 2


def test_weights_and_fusion(capsys):
    code, out = out_of(capsys, ["weights", "-r", "3", "-l", "4", "--format", "json"])
    assert json.loads(out)["count"] == 15
    code, out = out_of(capsys, ["fusion", "-r", "2", "-l", "2", "1", "1"])
    assert out.splitlines() == ["1\t0", "1\t2w1"]
    code, out = out_of(capsys, ["fusion", "-r", "12", "-l", "1", "5", "7", "0"])
    assert out.strip() == "1"


def test_branch(capsys):
    code, out = out_of(capsys, ["branch", "-r", "2", "-l", "2", "--size", "0", "--format", "json"])
    rows = json.loads(out)["summands"]
    assert [r["diagram"] for r in rows] == [[0, 0], [3, 1]]
    assert [r["gap"] for r in rows] == [0, 1]


def test_verify_skew_cauchy(capsys):
    code, out = out_of(capsys, ["verify", "skew-cauchy", "--rank", "2", "--level", "2",
                                "--format", "json"])
    assert code == 0
    assert json.loads(out)["suites"] == [{"suite": "skew-cauchy", "cases": 4, "failed": 0}]


def test_verify_failure_exits_1(capsys, monkeypatch):
    def broken(opts):
        yield suites.Case("broken", False, {"lhs": "1", "rhs": "2"})

    monkeypatch.setitem(cli.SUITES, "example", broken)
    code, out = out_of(capsys, ["verify", "example"])
    assert code == 1
    payload = json.loads(out[out.index("{"):])
    assert payload["failures"][0]["report"] == {"lhs": "1", "rhs": "2"}


@pytest.mark.parametrize("argv,needle", [
    (["fusion", "-r", "3", "-l", "2", "1,x", "1,1"], "character 3"),
    (["dim", "-r", "3", "-l", "2", "4"], "weight #1"),
    (["young", "-r", "3", "-l", "4", "--diagram", "6,4,x"], "character 5"),
    (["young", "-r", "2", "-l", "2", "--diagram", "2,2"], "aff"),
    (["dim", "-r", "2", "-l", "1", "2"], "P_1"),
    (["branch", "-r", "2", "-l", "2", "--size", "9"], "[0, 3]"),
    (["verify", "sd0", "--rank", "2"], "together"),
])
def test_usage_errors(capsys, argv, needle):
    code, err = usage_error(capsys, argv)
    assert code == 2 and needle in err


def test_unknown_verb(capsys):
    code, _ = usage_error(capsys, ["frobnicate"])
    assert code == 2


def test_output_is_deterministic(capsys, tmp_path):
    argv = ["verify", "genus0", "--max-rl", "6", "--count", "5", "--seed", "11", "--format", "json"]
    _, first = out_of(capsys, argv)
    _, second = out_of(capsys, argv)
    assert first == second
    target = tmp_path / "report.json"
    run(argv + ["--out", str(target)])
    assert target.read_text() == first


def test_verify_all_smoke():
    proc = subprocess.run([sys.executable, "-m", "ranklevel", "verify", "all",
                           "--max-rl", "8", "--genus", "2"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert all(line.startswith("PASS") for line in proc.stdout.splitlines())
