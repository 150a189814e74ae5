import io
import json
import subprocess
import sys

import pytest

from charvar.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_compute_jminus_text():
    code, out, _ = call("compute", "--genus", "2", "--holonomy", "j-")
    assert code == 0
    assert "q^8 - 3q^6 + 15q^5 + 6q^4 + 45q^3" in out
    assert "Z6" in out


def test_compute_json_schema():
    code, out, _ = call("compute", "--genus", "1", "--holonomy", "diag", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "charvar.report/1"
    assert doc["result"]["coefficients"] == [1, 4, 1]
    assert doc["passed"] is True


def test_compute_identity_fails_until_acknowledged():
    code, out, _ = call("compute", "--genus", "2", "--holonomy", "id")
    assert code == 1
    assert "DISCREPANCY M_Id_theorem" in out
    code, _, _ = call("compute", "--genus", "2", "--holonomy", "id",
                      "--acknowledge-known-discrepancies")
    assert code == 0


def test_table_genus1_clean():
    code, out, _ = call("table", "--genus", "1")
    assert code == 0
    assert "DISCREPANCY" not in out


def test_table_genus2_flags_identity_only():
    code, out, _ = call("table", "--genus", "2", "--format", "json")
    rows = json.loads(out)["table"]
    assert code == 1
    assert [r["holonomy"] for r in rows if not r["match"]] == ["Id"]


def test_verify_match_and_mismatch():
    code, out, _ = call("verify", "--space", "X2bar", "--primes", "3,5,7,11")
    assert code == 0 and "MISMATCH" not in out
    code, out, _ = call("verify", "--space", "X3bar", "--primes", "3,5")
    assert code == 1
    assert "p=3: expected 54, observed 0  [MISMATCH]" in out


def test_verify_lambda_option():
    code, out, _ = call("verify", "--space", "X4bar_lambda", "--primes", "7", "--lambda", "2")
    assert code == 0 and "lambda=2" in out


def test_interpolate_points():
    code, out, _ = call("interpolate", "--points", "3:24,5:120,7:336,11:1320", "--degree", "3")
    assert code == 0
    assert out.strip() == "points: q^3 - q"


def test_interpolate_failure_exit_code():
    code, out, _ = call("interpolate", "--points", "0:0,2:1", "--degree", "1")
    assert code == 1 and "interpolation failed" in out


def test_interpolate_space():
    code, out, _ = call("interpolate", "--space", "X1", "--primes", "3,5,7,11")
    assert code == 0 and "q^3 - q" in out


def test_report_runs_every_check():
    code, out, _ = call("report", "--acknowledge-known-discrepancies", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert all(c["passed"] for c in doc["checks"])
    assert {d["name"] for d in doc["discrepancies"]} == {"M_Id_theorem", "Y4", "Y"}


def test_report_without_acknowledgement_fails():
    code, out, _ = call("report")
    assert code == 1
    assert "[known discrepancy] M_Id_theorem" in out


@pytest.mark.parametrize("argv", [
    ("compute", "--holonomy", "id"),
    ("compute", "--genus", "2"),
    ("compute", "--genus", "2", "--holonomy", "j0"),
    ("verify", "--space", "X0", "--primes", "4"),
    ("verify", "--space", "X0", "--primes", "37"),
    ("verify", "--space", "nope", "--primes", "3"),
    ("verify", "--space", "X4bar_lambda", "--primes", "5", "--lambda", "4"),
    ("verify", "--space", "X0", "--threads", "0"),
    ("bogus",),
])
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "charvar", "compute", "--genus", "1",
                           "--holonomy", "j+"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "q^2 - 2q - 3" in proc.stdout
