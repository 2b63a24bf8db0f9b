import io
import json
import subprocess
import sys

import pytest

from xiprobe.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# --- eval -----------------------------------------------------------------

def test_eval_one():
    code, out = run("eval", "--re", "1", "--im", "0", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["value_re"] == pytest.approx(0.5, abs=1e-14)


def test_eval_half_csv():
    code, out = run("--format", "csv", "eval", "--re", "0.5", "--im", "0")
    header, row = out.strip().splitlines()
    rec = dict(zip(header.split(","), row.split(",")))
    assert float(rec["value_re"]) == pytest.approx(0.497120778, abs=1e-9)


def test_eval_human():
    code, out = run("eval", "--re", "1000")
    assert code == 0 and "overflows" in out and "log|xi(s)|" in out


def test_eval_malformed():
    assert run("eval", "--re", "x")[0] == 2


def test_no_command():
    assert run()[0] == 2


# --- scan -----------------------------------------------------------------

def test_scan_right_of_strip_exit_zero():
    code, out = run("scan", "--t0", "0", "--from", "1.01", "--to", "30", "--step", "0.01",
                    "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "sigma,log_abs_xi"
    assert len(lines) == 2901
    assert "\r" not in out


def test_scan_through_zero_exit_one():
    code, _ = run("scan", "--t0", "14.134725", "--from", "0.4", "--to", "0.6", "--step", "0.001")
    assert code == 1


def test_scan_bad_step_exit_two():
    assert run("scan", "--step", "-1", "--from", "1", "--to", "2")[0] == 2


def test_scan_missing_from():
    assert run("scan", "--to", "2", "--step", "0.1")[0] == 2


def test_scan_json_fields():
    code, out = run("scan", "--t0", "5", "--from", "-3", "--to", "-0.5", "--step", "0.1",
                    "--direction", "leftward", "--cross-check", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["monotone"] is True and rec["violations"] == []
    assert rec["spec"]["direction"] == "leftward"
    assert rec["mirror_discrepancy"] < 1e-10


def test_scan_rh_probe():
    code, out = run("scan", "--t0", "21.022", "--to", "5", "--step", "0.01", "--rh-probe")
    assert code == 0 and "monotone: true" in out


def test_scan_json_deterministic():
    argv = ["scan", "--t0", "14.134725", "--from", "0.4", "--to", "0.6", "--step", "0.01",
            "--format", "json"]
    assert run(*argv) == run(*argv)


# --- hadamard -------------------------------------------------------------

def test_hadamard_origin():
    code, out = run("hadamard", "--re", "0", "--im", "0", "--n", "100", "--mode", "regrouped",
                    "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["relative_error"] < 1e-12
    assert rec["truncated_log_abs"] == pytest.approx(-0.693147180559945, abs=1e-14)


def test_hadamard_two():
    code, out = run("hadamard", "--re", "2", "--im", "0", "--n", "1000", "--format", "json")
    assert code == 0 and json.loads(out)["relative_error"] < 1e-2


def test_hadamard_too_many_zeros():
    assert run("hadamard", "--n", "10000000")[0] == 2


def test_hadamard_bad_zeros_file(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3\n2\n")
    assert run("--zeros", str(p), "hadamard", "--n", "1")[0] == 2
    assert run("hadamard", "--n", "1", "--zeros", str(tmp_path / "missing.txt"))[0] == 2


# --- bconst ---------------------------------------------------------------

def test_bconst_zero():
    code, out = run("bconst", "--n", "0", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert str(rec["B"]).startswith("-0.023095")
    assert rec["deficit"] == pytest.approx(0.023095, abs=1e-6)


def test_bconst_one():
    code, out = run("bconst", "--n", "1", "--format", "csv")
    header, row = out.strip().splitlines()
    rec = dict(zip(header.split(","), row.split(",")))
    assert float(rec["deficit"]) == pytest.approx(0.018096, abs=1e-6)


@pytest.mark.parametrize("n", [2, 10, 100, 1000, 10000])
def test_bconst_deficit_positive(n):
    rec = json.loads(run("bconst", "--n", str(n), "--format", "json")[1])
    assert rec["deficit"] > 0


def test_bconst_env_table(tmp_path, monkeypatch):
    p = tmp_path / "z.txt"
    p.write_text("14.134725141734694\n")
    monkeypatch.setenv("XI_ZEROS_PATH", str(p))
    assert run("bconst", "--n", "2")[0] == 2
    assert run("bconst", "--n", "1")[0] == 0


# --- cond -----------------------------------------------------------------

def test_cond_fails_at_n1():
    code, out = run("cond", "--sigma", "1.1", "--t0", "0", "--n", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 1 and rec["holds"] is False
    assert rec["lhs"] == pytest.approx(0.002998, abs=1e-6)
    assert rec["rhs"] == pytest.approx(0.018096, abs=1e-6)


def test_cond_find_min_n():
    code, out = run("cond", "--sigma", "1.1", "--t0", "0", "--find-min-n", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["holds"] is True and rec["fd_slope"] > 0 and rec["n"] >= 1


def test_cond_exhausted():
    assert run("cond", "--sigma", "0.4", "--t0", "0", "--find-min-n")[0] == 1


def test_cond_needs_n():
    assert run("cond", "--sigma", "1.1")[0] == 2


def test_cond_degenerate(table):
    rho1 = table[0]
    assert run("cond", "--sigma", repr(rho1.beta), "--t0", repr(rho1.gamma), "--n", "3")[0] == 2


# --- zeros ----------------------------------------------------------------

def test_zeros_compute_first():
    code, out = run("zeros", "--compute", "--tmax", "15")
    rows = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert code == 0 and len(rows) == 1
    assert float(rows[0]) == pytest.approx(14.134725, abs=1e-6)


def test_zeros_compute_output_is_loadable(tmp_path):
    code, out = run("zeros", "--compute", "--tmax", "30")
    p = tmp_path / "z.txt"
    p.write_text(out)
    assert run("--zeros", str(p), "bconst", "--n", "3")[0] == 0


def test_zeros_validate():
    code, out = run("zeros", "--validate", "--tmax", "50", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["computed"] == rec["tabulated"] == 10 and rec["ok"]


def test_zeros_validate_mismatch(tmp_path):
    p = tmp_path / "z.txt"
    p.write_text("14.1348\n21.022039638771\n")
    assert run("--zeros", str(p), "zeros", "--validate", "--tmax", "22")[0] == 1


def test_zeros_compute_empty(capsys):
    code, out = run("zeros", "--compute", "--tmax", "0.3")
    assert code == 0
    assert [ln for ln in out.splitlines() if not ln.startswith("#")] == []
    assert "warning" in capsys.readouterr().err


# --- process level --------------------------------------------------------

def _proc(*argv):
    return subprocess.run([sys.executable, "-m", "xiprobe", *argv], capture_output=True)


def test_module_entry_point_exit_codes():
    assert _proc("eval", "--re", "x").returncode == 2
    assert _proc("bconst", "--n", "0").returncode == 0


def test_csv_bytes_identical_across_processes():
    argv = ("scan", "--t0", "1", "--from", "1.01", "--to", "3", "--step", "0.01", "--format", "csv")
    a, b = _proc(*argv), _proc(*argv)
    assert a.returncode == 0
    assert a.stdout == b.stdout and a.stdout.startswith(b"sigma,log_abs_xi\n")
