import json
from pathlib import Path

import pytest

from digroot.cli import EXIT_MALFORMED, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, run
from digroot.oracle import range_verifier
from digroot.oracle.range_verifier import Mismatch
from digroot.utils.utils_config import load_config

GOLDEN_DIR = Path(__file__).parent.parent / "tableau" / "goldens"


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cbrt_worked_example(capsys):
    code, out, _ = run_cli(capsys, "cbrt", "34965783")
    assert code == EXIT_OK
    assert out == "327\n"


def test_sqrt_with_remainder(capsys):
    code, out, _ = run_cli(capsys, "sqrt", "10")
    assert code == EXIT_OK
    assert out == "3 r 1\n"


def test_zero(capsys):
    assert run_cli(capsys, "sqrt", "0")[1] == "0\n"


def test_malformed_number(capsys):
    code, out, err = run_cli(capsys, "sqrt", "12x4")
    assert code == EXIT_MALFORMED
    assert out == ""
    assert "12x4" in err


def test_usage_errors(capsys):
    assert run_cli(capsys, "sqrt")[0] == EXIT_USAGE
    assert run_cli(capsys, "qrt", "16")[0] == EXIT_USAGE
    assert run_cli(capsys)[0] == EXIT_USAGE
    assert run_cli(capsys, "verify", "--k", "4", "--max", "10")[0] == EXIT_USAGE
    assert run_cli(capsys, "verify", "--k", "2")[0] == EXIT_USAGE
    assert run_cli(capsys, "verify", "--k", "2", "--max", "10", "--random", "5")[0] == EXIT_USAGE
    assert run_cli(capsys, "verify", "--k", "2", "--random", "5", "--digits", "0")[0] == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == EXIT_OK
    assert "sqrt" in out


def test_tableau_flag(capsys):
    code, out, _ = run_cli(capsys, "cbrt", "34965783", "--tableau")
    assert code == EXIT_OK
    assert out == "327\n" + (GOLDEN_DIR / "cbrt_34965783.txt").read_text()


def test_trace_flag(capsys):
    _, out, _ = run_cli(capsys, "sqrt", "256", "--trace")
    lines = out.splitlines()
    assert lines[0] == "16"
    assert lines[1].startswith("mark-places")
    assert any(line.startswith("decrement-adjust") for line in lines)


def test_count_ops_flag(capsys):
    _, out, _ = run_cli(capsys, "cbrt", "34965783", "--count-ops")
    assert "predicted" in out
    assert "measured" in out
    assert "adjustments: 0" in out


def test_json_envelope(capsys):
    code, out, _ = run_cli(capsys, "cbrt", "34965783", "--json")
    assert code == EXIT_OK
    envelope = json.loads(out)
    assert list(envelope) == ["input", "k", "root", "remainder", "iterations", "adjustments"]
    assert envelope == {
        "input": "34965783",
        "k": 3,
        "root": "327",
        "remainder": "0",
        "iterations": 2,
        "adjustments": 0,
    }


def test_json_with_all_sections(capsys):
    _, out, _ = run_cli(capsys, "sqrt", "11943936", "--json", "--trace", "--count-ops", "--tableau")
    envelope = json.loads(out)
    assert list(envelope) == [
        "input", "k", "root", "remainder", "iterations", "adjustments", "trace", "counters", "predicted", "tableau",
    ]
    subtracts = [e for e in envelope["trace"] if e["kind"] == "subtract"]
    assert [e["operands"][1] for e in subtracts] == ["9", "24", "16", "340", "25", "4140", "36"]
    assert all(isinstance(o, str) for e in envelope["trace"] for o in e["operands"])
    assert envelope["counters"] == {"M": 12, "A": 9, "D": 3, "S": 7, "lookups": 1}
    assert envelope["predicted"] == {"M": 15, "A": 9, "D": 6, "S": 9, "lookups": 1}
    assert envelope["tableau"] == (GOLDEN_DIR / "sqrt_11943936.txt").read_text().rstrip("\n")


def test_json_numbers_have_no_precision_ceiling(capsys):
    big = "9" * 80
    _, out, _ = run_cli(capsys, "sqrt", big, "--json")
    envelope = json.loads(out)
    root = int(envelope["root"])
    assert root**2 + int(envelope["remainder"]) == int(big)
    assert envelope["input"] == big


@pytest.mark.parametrize(
    "argv",
    [
        ("cbrt", "34965783", "--json", "--trace", "--count-ops"),
        ("sqrt", "11943936", "--json", "--trace", "--count-ops"),
        ("cbrt", "34965783", "--tableau"),
        ("sqrt", "11943936", "--tableau"),
    ],
)
def test_output_is_byte_identical_across_runs(capsys, argv):
    outputs = {run_cli(capsys, *argv)[1] for _ in range(5)}
    assert len(outputs) == 1


def test_verify_max(capsys):
    code, out, _ = run_cli(capsys, "verify", "--k", "2", "--max", "1000")
    assert code == EXIT_OK
    assert "1001 values checked" in out


def test_verify_random(capsys):
    code, out, _ = run_cli(capsys, "verify", "--k", "3", "--random", "50", "--digits", "30", "--seed", "3")
    assert code == EXIT_OK
    assert "50 values checked" in out


def test_verify_random_count_from_settings(capsys, monkeypatch):
    monkeypatch.setitem(load_config()["verify"], "random_count", 40)
    code, out, _ = run_cli(capsys, "verify", "--k", "2", "--random", "--digits", "20")
    assert code == EXIT_OK
    assert "40 values checked" in out


def test_verify_malformed_max(capsys):
    assert run_cli(capsys, "verify", "--k", "3", "--max", "1e6")[0] == EXIT_MALFORMED


def test_verify_reports_smallest_mismatch(capsys, monkeypatch):
    def broken_check(x, k, check_invariants=False):
        if x in (17, 40, 90):
            return Mismatch(x, k, 0, x, 4, x - 16)
        return None

    monkeypatch.setattr(range_verifier, "check_value", broken_check)
    code, out, err = run_cli(capsys, "verify", "--k", "2", "--max", "100", "--batch-size", "30")
    assert code == EXIT_MISMATCH
    assert out == ""
    assert "x=17" in err
