import json
import subprocess
import sys

import pytest

from cochar.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hilbert_csv(capsys):
    code, out, _ = run(capsys, "hilbert", "--spec", "2", "--n", "2", "--D", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "e1,e2,dim"
    assert "1,1,2" in lines and "2,1,2" in lines


def test_hilbert_product_shows_both_routes(capsys):
    code, out, _ = run(capsys, "hilbert", "--spec", "1,1", "--n", "2", "--D", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].split() == ["e1", "e2", "dim", "formula"]
    rows = [line.split() for line in lines[2:] if not line.startswith(("per", "formula"))]
    assert len(rows) == 15 and all(r[2] == r[3] for r in rows)
    assert "per degree: 1,2,4,8,15" in out


def test_hilbert_single_letter(capsys):
    code, out, _ = run(capsys, "hilbert", "--spec", "1", "--n", "1", "--D", "3")
    assert code == 0
    assert "per degree: 1,1,1,1" in out


def test_hilbert_json(capsys):
    code, out, _ = run(capsys, "hilbert", "--spec", "2,1", "--n", "2", "--D", "5",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["agree"] is True
    assert doc["series"]["role"] == "full"


def test_cocharacter(capsys):
    code, out, _ = run(capsys, "cocharacter", "--spec", "2", "--m", "3")
    assert code == 0
    assert out.splitlines() == ["c_3 = 4", "(3): 1", "(2,1): 1", "(1,1,1): 1"]
    code, out, _ = run(capsys, "cocharacter", "--spec", "1", "--m", "5")
    assert out.splitlines() == ["c_5 = 1", "(5): 1"]


def test_cocharacter_crosscheck(capsys):
    code, out, _ = run(capsys, "cocharacter", "--spec", "1,1", "--m", "4", "--crosscheck")
    assert code == 0
    assert out.splitlines()[-1] == "crosscheck: OK"


def test_cocharacter_csv(capsys):
    code, out, _ = run(capsys, "cocharacter", "--spec", "2", "--m", "3", "--format", "csv")
    assert out.splitlines() == ["cycle_type,value", "3,1", "2 1,0", "1 1 1,4"]


def test_verify_suites(capsys):
    assert run(capsys, "verify", "--suite", "formanek", "--spec", "2,1", "--n", "2",
               "--D", "5")[0] == 0
    assert run(capsys, "verify", "--suite", "bounds", "--spec", "3", "--n", "4", "--D", "6")[0] == 0
    assert run(capsys, "verify", "--suite", "inclusion", "--specA", "2,1", "--specB", "3",
               "--n", "2", "--D", "6")[0] == 0
    code, out, _ = run(capsys, "verify", "--suite", "inclusion", "--specA", "2,1",
                       "--specB", "4", "--n", "2", "--D", "6")
    assert code == 1 and "witnesses" in out


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "sl-invariants", "--spec", "1,1",
                       "--n", "3", "--D", "6", "--format", "json")
    assert code == 1
    assert json.loads(out)[0]["verdict"] == "fail"


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--spec", "2", "--n", "2", "--D", "4")
    assert code == 0
    assert out.splitlines()[0] == "1 + t^2; bound n*s2 = 2: certified"
    code, out, _ = run(capsys, "invariants", "--spec", "1", "--n", "3", "--D", "3")
    assert out.splitlines()[0] == "1; bound n*s2 = 0: certified"
    code, out, _ = run(capsys, "invariants", "--spec", "2,2", "--n", "3", "--D", "4")
    assert code == 0
    assert "bound n*s2 = 9: InsufficientTruncation" in out


@pytest.mark.parametrize("args", [
    ["hilbert", "--spec", "x", "--n", "2", "--D", "3"],
    ["hilbert", "--spec", "2", "--n", "0", "--D", "3"],
    ["hilbert", "--spec", "2", "--n", "2", "--D", "-1"],
    ["verify", "--suite", "inclusion", "--specA", "2", "--n", "2", "--D", "3"],
])
def test_usage_errors(capsys, args):
    assert main(args) == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hilbert", "--spec", "2"])
    assert exc.value.code == 2


def test_resource_limits(capsys, monkeypatch):
    assert main(["hilbert", "--spec", "2", "--n", "5", "--D", "3"]) == 3
    assert main(["cocharacter", "--spec", "2", "--m", "8"]) == 3
    assert main(["hilbert", "--spec", "2", "--n", "3", "--D", "6", "--limit-words", "100"]) == 3
    monkeypatch.setenv("COCHAR_MAX_WORDS", "50")
    assert main(["hilbert", "--spec", "2", "--n", "3", "--D", "4"]) == 3
    assert main(["hilbert", "--spec", "2", "--n", "5", "--D", "2", "--force"]) == 0


def test_out_file(tmp_path, capsys):
    target = tmp_path / "series.csv"
    assert main(["hilbert", "--spec", "1", "--n", "1", "--D", "2", "--format", "csv",
                 "--out", str(target)]) == 0
    assert target.read_text() == "e1,dim\n0,1\n1,1\n2,1\n"


def test_output_is_byte_identical():
    cmd = [sys.executable, "-m", "cochar.cli", "verify", "--suite", "all", "--spec", "2,1",
           "--specA", "2", "--specB", "1", "--n", "2", "--D", "5", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
