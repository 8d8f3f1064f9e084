from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from superpoisson.cli import run_command
from superpoisson.fileformat import parse_algebra_file

DATA = Path(__file__).parent / "data"

EXPECTED = {
    "sp21.json": 0,
    "sp22.json": 0,
    "sp23.json": 0,
    "sp24.json": 0,
    "fail_ab.json": 1,
    "fail_flex.json": 1,
    "fail_random21.json": 1,
    "fail_pair.json": 1,
    "bad_zero_denominator.json": 2,
    "bad_index.json": 2,
    "bad_grading.json": 2,
    "bad_syntax.json": 2,
}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_verify_exit_codes(name):
    code, out, err = run("verify", DATA / name)
    assert code == EXPECTED[name]
    if code == 2:
        assert err.startswith("error: ") and out == ""
    else:
        assert out.rstrip().endswith("PASS" if code == 0 else "FAIL")


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_reports_deterministic(name):
    assert run("verify", DATA / name) == run("verify", DATA / name)
    assert run("verify", "--json", DATA / name) == run("verify", "--json", DATA / name)


def test_failing_report_has_witness():
    code, out, _ = run("verify", DATA / "fail_ab.json")
    assert code == 1
    assert "super_poisson: FAIL" in out and "witness (e0, e0, e1)" in out


def test_error_locations():
    _, _, err = run("verify", DATA / "bad_zero_denominator.json")
    assert "products[0].result[0].coeff" in err
    _, _, err = run("verify", DATA / "bad_syntax.json")
    assert "line 2" in err


def test_json_output_parses():
    code, out, _ = run("verify", "--json", DATA / "sp24.json")
    assert code == 0
    data = json.loads(out)
    assert isinstance(data, dict)


def test_missing_file_is_input_error(tmp_path):
    code, _, err = run("verify", tmp_path / "nope.json")
    assert code == 2 and "error" in err


def test_split_fuse_roundtrip(tmp_path):
    for name in ("sp21.json", "sp22.json", "sp23.json", "sp24.json", "fail_random21.json"):
        code, pair_text, _ = run("split", DATA / name)
        assert code == 0
        pair_file = tmp_path / "pair.json"
        pair_file.write_text(pair_text)
        code, alg_text, _ = run("fuse", pair_file)
        assert code == 0
        original = parse_algebra_file((DATA / name).read_text())
        assert parse_algebra_file(alg_text) == original


def test_split_of_pair_file_is_input_error():
    code, _, _ = run("split", DATA / "fail_pair.json")
    assert code == 2


def test_powers_command():
    code, out, _ = run("powers", DATA / "sp24.json", "--element", 1, "--max-n", 5)
    assert code == 0
    assert "n=2: y^n = e0" in out and "overall: PASS" in out
    code, _, _ = run("powers", DATA / "sp24.json", "--element", 5)
    assert code == 2


def test_prove_command():
    code, out, _ = run("prove")
    assert code == 0 and "overall: PASS" in out
    code, _, _ = run("prove", "--variant", "left_nested")
    assert code == 1


def test_classify2_small_grid():
    code, out, _ = run("classify2", "--grid-min", 0, "--grid-max", 1)
    assert code in (0, 1) and out


def test_usage_errors():
    assert run("bogus")[0] == 2
    assert run("verify")[0] == 2
    assert run("powers", DATA / "sp24.json")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "superpoisson", "verify", str(DATA / "sp24.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "super_poisson: PASS" in proc.stdout
