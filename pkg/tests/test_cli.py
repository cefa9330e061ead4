import json
import subprocess
import sys

import pytest

from vps.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_degree(capsys):
    assert run(capsys, "degree", "--n", "4") == (0, "310\n", "")
    assert run(capsys, "degree", "--n", "2")[1] == "1\n"


def test_degree_json(capsys):
    code, out, _ = run(capsys, "degree", "--n", "5", "--json")
    data = json.loads(out)
    assert data == {"schema": 1, "command": "degree", "result": {"n": "5", "degree": "395780"}}


def test_degree_per_partition(capsys):
    code, out, _ = run(capsys, "degree", "--n", "4", "--per-partition")
    lines = out.splitlines()
    assert len(lines) == 6 and lines[-1] == "total=310"
    assert lines[1] == "lambda=(3,2,1,0) multinomial=60 lambda_star_factorial=1 d_lambda=1 summand=60"


def test_chart_strata(capsys):
    assert run(capsys, "chart", "--n", "3", "--subvariety", "loc")[1] == "a222\n"
    code, out, _ = run(capsys, "chart", "--n", "5", "--subvariety", "sec", "--json")
    assert len(json.loads(out)["result"]["generators"]) == 6
    code, out, _ = run(capsys, "chart", "--n", "4")
    assert len(out.splitlines()) == 6


def test_pencil_commands(tmp_path, capsys):
    q = tmp_path / "q.txt"
    q2 = tmp_path / "q2.txt"
    q.write_text("y1^2 + y2^2 + y3^2\n")
    q2.write_text("# second quadric\ny1^2 + 2*y2^2 + 3*y3^2\n")
    code, out, _ = run(capsys, "mukai", "--q", str(q), "--qprime", str(q2))
    assert code == 0 and out.splitlines() == ["x1*x2", "x1*x3", "x2*x3"]
    code, out, _ = run(capsys, "eigensimplex", "--q", str(q), "--qprime", str(q2), "--json")
    result = json.loads(out)["result"]
    assert result["representation"] == "points"
    assert result["eigenvalues"] == ["1", "2", "3"]


def test_betti(tmp_path, capsys):
    q = tmp_path / "q.txt"
    q.write_text("2*y1*y4 + y2^2 + y3^2")
    code, out, _ = run(capsys, "betti", "--quadric", str(q), "--steps", "4", "--expected", "aq")
    assert code == 0 and out.splitlines()[-1] == "PASS expected aq"
    code, out, _ = run(capsys, "betti", "--quadric", str(q), "--steps", "4", "--expected", "points")
    assert code == 3 and out.splitlines()[-1] == "FAIL expected points"


def test_count_and_jrank(tmp_path, capsys):
    ideal = tmp_path / "ideal.txt"
    ideal.write_text("x1*x2\nx2^2 - x1*x3\n")
    point = tmp_path / "point.txt"
    point.write_text("1, 0, 0\n")
    assert run(capsys, "count", "--ideal", str(ideal), "--prime", "3", "--vars", "3")[1] == "5\n"
    assert run(capsys, "jrank", "--ideal", str(ideal), "--point", str(point))[1] == "2\n"
    assert run(capsys, "jrank", "--ideal", str(ideal), "--point", str(point), "--prime", "5")[1] == "2\n"


def test_spinor_check(capsys):
    code, out, _ = run(capsys, "spinor-check")
    assert code == 0 and "ok: true" in out


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "degree,chart,spinor")
    assert code == 0
    assert out.splitlines()[0] == "seed 0"
    assert out.splitlines()[-1] == "6/6 checks passed"


@pytest.mark.parametrize("argv", [["bogus"], ["degree"], ["degree", "--n", "4", "--bad"],
                                  ["degree", "--n", "four"], ["chart", "--n", "4", "--subvariety", "xyz"],
                                  ["degree", "--n", "4", "--per"]])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_computation_errors(tmp_path, capsys):
    code, _, err = run(capsys, "degree", "--n", "1")
    assert code == 1 and "OutOfRange" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("x1 + * x2\n")
    code, _, err = run(capsys, "count", "--ideal", str(bad), "--prime", "3", "--vars", "2")
    assert code == 1 and "ParseError" in err
    code, _, err = run(capsys, "count", "--ideal", str(tmp_path / "missing"), "--prime", "3", "--vars", "2")
    assert code == 1
    code, _, err = run(capsys, "verify", "--suite", "nonsense")
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "vps", "degree", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "5\n"
