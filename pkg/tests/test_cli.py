import io
import subprocess
import sys

import pytest

from cycgrad.cli import main
from cycgrad.expr_io import deserialize
from cycgrad.oracle import NumericReport


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue().splitlines(), err.getvalue()


@pytest.mark.parametrize(
    "argv, code, lines",
    [
        (["grad", "--n", "2", "X1*X2"], 0, ["X2", "X1"]),
        (["grad", "--n", "2", "X1*X2 - X2*X1"], 0, ["0", "0"]),
        (["grad", "--n", "1", "7"], 0, ["0"]),
        (["check", "--n", "2", "X2", "X1"], 0, ["GRADIENT", "1/2*X1*X2 + 1/2*X2*X1"]),
        (["check", "--n", "2", "X2", "0"], 1, ["NOT-GRADIENT", "X1*X2 - X2*X1"]),
        (["check", "--n", "2", "0", "0"], 0, ["GRADIENT", "0"]),
        (["kernel", "--n", "2", "X1*X2 - X2*X1"], 0, ["KERNEL", "constant: 0", "Q1: X2", "Q2: 0"]),
        (["kernel", "--n", "2", "5"], 0, ["KERNEL", "constant: 5", "Q1: 0", "Q2: 0"]),
        (["kernel", "--n", "2", "X1*X2"], 1, ["NOT-KERNEL", "X1*X2 + X2*X1"]),
        (["cyclic-symmetrize", "X1*X2*X1*X2"], 0, ["2*X1*X2*X1*X2 + 2*X2*X1*X2*X1"]),
        (["number-op", "3 + X1 + 5*X2*X2"], 0, ["X1 + 10*X2*X2"]),
        (["theta", "X2", "0"], 0, ["X1*X2 - X2*X1"]),
    ],
)
def test_documented_invocations(argv, code, lines):
    got_code, got_lines, _ = run(argv)
    assert (got_code, got_lines) == (code, lines)


def test_n_inferred_from_largest_index():
    assert run(["grad", "X3"])[1] == ["0", "0", "1"]
    assert run(["grad", "--n", "4", "X3"])[1] == ["0", "0", "1", "0"]


def test_stdin_one_expression_per_line():
    code, lines, _ = run(["check"], stdin="X2\n\nX1\n")
    assert code == 0 and lines[0] == "GRADIENT"
    assert run(["grad", "--n", "2"], stdin="X1*X2\n")[1] == ["X2", "X1"]


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["grad", "--n", "2", "X3"], ""),
        (["grad", "X1 +"], ""),
        (["grad"], ""),
        (["grad", "--n", "2"], "X1\nX2\n"),
        (["check", "--n", "2", "X1"], ""),
        (["check", "X1", "X3"], ""),
        (["kernel", "(X1"], ""),
        (["frobnicate"], ""),
        (["grad", "--n", "0", "X1"], ""),
        (["verify", "--trials", "-1"], ""),
        (["verify", "--numeric", "0"], ""),
        (["verify", "--numeric", "9", "--trials", "1"], ""),
    ],
)
def test_errors_exit_two(argv, stdin, capsys):
    code, lines, err = run(argv, stdin)
    assert code == 2
    assert not lines


def test_parse_error_reports_position():
    _, _, err = run(["grad", "--n", "2", "X1 + * X2"])
    assert "line 1, column 6" in err


def test_verify_zero_trials():
    code, lines, _ = run(["verify", "--trials", "0"])
    assert code == 0 and lines[-1] == "failures: 0"


def test_verify_symbolic():
    code, lines, _ = run(["verify", "--trials", "200", "--max-degree", "5", "--n", "3", "--seed", "7"])
    assert code == 0
    assert lines[-1] == "failures: 0"


def test_verify_numeric():
    code, lines, _ = run(["verify", "--trials", "50", "--numeric", "4"])
    assert code == 0
    assert "  fd_trace_gradient: 50/50 pass" in lines


def test_verify_failure_exit_code(monkeypatch):
    from cycgrad import verify

    real = verify.numeric_suite
    monkeypatch.setattr(verify, "numeric_suite", lambda *a: real(*a) + [NumericReport("x", 1.0, 0.0)])
    assert run(["verify", "--trials", "1", "--numeric", "2"])[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["grad", "--n", "2", "X1*X2*X1"],
        ["check", "X2", "X1"],
        ["check", "X2", "0"],
        ["kernel", "--n", "2", "X1*X1*X2 - X2*X1*X1"],
        ["kernel", "--n", "2", "X1*X2"],
        ["cyclic-symmetrize", "X1*X2"],
        ["number-op", "X1*X2"],
        ["theta", "X2", "X1"],
        ["verify", "--trials", "3", "--numeric", "2"],
    ],
)
def test_doc_output_round_trips(argv):
    code, lines, _ = run(argv + ["--format", "doc"])
    assert code in (0, 1)
    assert len(lines) == 1
    from cycgrad.expr_io import serialize

    assert serialize(deserialize(lines[0])) == lines[0]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cycgrad", "check", "--n", "2", "X2", "0"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 1
    assert proc.stdout.splitlines() == ["NOT-GRADIENT", "X1*X2 - X2*X1"]
