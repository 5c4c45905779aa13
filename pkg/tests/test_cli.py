"""Command-line interface: exit codes, output formats, determinism, config."""

import csv
import io
import json
import os
import subprocess
import sys

CLI = [sys.executable, "-m", "elliptic_sl2"]


def run(*args, env_extra=None, timeout=120):
    env = dict(os.environ)
    env.pop("ELLIPTIC_SL2_FORMAT", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(CLI + list(args), capture_output=True, text=True,
                          env=env, timeout=timeout)


def test_version_flag():
    proc = run("--version")
    assert proc.returncode == 0
    assert "elliptic-sl2" in proc.stdout


def test_rep_build_json():
    proc = run("rep", "build", "--j", "0.5")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["dim"] == 2
    assert payload["Jp"]["entries"][1] == [1.0, 0.0]


def test_elliptic_K_values():
    proc = run("elliptic", "K", "--k", "0.5")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert abs(payload["K"] - 1.6857503548125961) < 1e-15
    assert abs(payload["Kprime"] - 2.1565156474996434) < 1e-15


def test_deform_verify_passes_and_respects_tol():
    proc = run("deform", "verify", "--j", "1", "--h", "0.7", "--k", "0.6")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True
    strict = run("deform", "verify", "--j", "1", "--h", "0.7", "--k", "0.6",
                 "--tol", "1e-20")
    assert strict.returncode == 1
    assert json.loads(strict.stdout)["pass"] is False


def test_hopf_verify():
    proc = run("hopf", "verify", "--which", "2", "--j1", "0.5", "--j2", "0.5",
               "--h", "0.8", "--k", "0.5")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["report"]["cocommutativity_gap"] > 0.1
    assert payload["pass"] is True


def test_auto_shift_all_kinds():
    for which, extra in (("sign", ["--k", "0.6"]),
                         ("uh-half", []),
                         ("ell-iKp", ["--k", "0.6"]),
                         ("ell-2KiKp", ["--k", "0.6"])):
        proc = run("auto", "shift", "--which", which, "--j", "1", "--h", "0.7", *extra)
        assert proc.returncode == 0, (which, proc.stderr)
        assert json.loads(proc.stdout)["pass"] is True


def test_rewrite_nf_and_strategies():
    proc = run("rewrite", "nf", "--expr", "[Jp, Jm] - 2*J0")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["terms"] == []
    left = run("rewrite", "nf", "--expr", "Jpinv Jm Jp", "--strategy", "leftmost")
    right = run("rewrite", "nf", "--expr", "Jpinv Jm Jp", "--strategy", "rightmost")
    assert left.returncode == 0 and right.returncode == 0
    assert json.loads(left.stdout)["terms"] == json.loads(right.stdout)["terms"]


def test_usage_error_is_exit_2():
    proc = run("no-such-verb")
    assert proc.returncode == 2
    proc = run("deform")
    assert proc.returncode == 2


def test_domain_error_is_exit_3_with_structured_report():
    proc = run("rewrite", "nf", "--expr", "Jp + * Jm")
    assert proc.returncode == 3
    err = json.loads(proc.stderr)
    assert err["error"]["type"] == "DomainError"
    assert "position" in err["error"]["message"]


def test_pole_is_exit_3():
    proc = run("elliptic", "eval", "--k", "0.6", "--u", "1.9953027776647292i")
    assert proc.returncode == 3
    assert json.loads(proc.stderr)["error"]["type"] == "PoleError"


def test_missing_value_is_exit_3():
    proc = run("deform", "verify", "--j", "1", "--h", "0.7")
    assert proc.returncode == 3
    assert "k" in json.loads(proc.stderr)["error"]["message"]


def test_csv_output_and_env_var_default(tmp_path):
    proc = run("elliptic", "K", "--k", "0.5", env_extra={"ELLIPTIC_SL2_FORMAT": "csv"})
    assert proc.returncode == 0
    rows = list(csv.reader(io.StringIO(proc.stdout)))
    assert rows[0] == ["key", "value"]
    assert rows[1][0] == "k"
    # explicit flag beats the environment
    proc = run("elliptic", "K", "--k", "0.5", "--format", "json",
               env_extra={"ELLIPTIC_SL2_FORMAT": "csv"})
    json.loads(proc.stdout)


def test_config_file_defaults_and_flag_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("k=0.5\nformat=csv  # trailing comment\n")
    proc = run("elliptic", "K", "--config", str(cfg))
    assert proc.returncode == 0
    rows = dict(r[:2] for r in csv.reader(io.StringIO(proc.stdout)) if r)
    assert rows["k"] == "0.5"
    over = run("elliptic", "K", "--k", "0.9", "--config", str(cfg), "--format", "json")
    assert json.loads(over.stdout)["k"] == 0.9


def test_config_rejects_malformed_lines(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("this is not a pair\n")
    proc = run("elliptic", "K", "--config", str(cfg))
    assert proc.returncode == 3


def test_sweep_deterministic_and_parallel_identical(tmp_path):
    args = ("sweep", "--families", "deform", "--j", "0.5,1", "--h", "0.7",
            "--k", "0.4,1.0", "--format", "csv")
    a = run(*args)
    b = run(*args)
    assert a.returncode == 0 and a.stdout == b.stdout
    par = run(*args, "--workers", "2")
    assert par.stdout == a.stdout
    header = next(csv.reader(io.StringIO(a.stdout)))
    assert header[:5] == ["family", "j", "h", "k", "status"]


def test_sweep_elliptic_marks_unit_modulus_as_error():
    proc = run("sweep", "--families", "elliptic", "--j", "0.5", "--h", "0.7",
               "--k", "0.6,1.0")
    assert proc.returncode == 1
    payload = json.loads(proc.stdout)
    by_k = {row["k"]: row for row in payload["rows"]}
    assert by_k[0.6]["status"] == "ok" and by_k[0.6]["pass"] is True
    assert by_k[1.0]["status"] == "error"
    assert "0 < k < 1" in by_k[1.0]["error"]
    assert payload["pass"] is False


def test_verify_all_passes():
    proc = run("verify-all", "--h", "0.7", "--k", "0.6")
    assert proc.returncode == 0, proc.stderr
    payload = json.loads(proc.stdout)
    assert payload["pass"] is True
    assert payload["induced_maps_exact"] is True


def test_out_file_matches_stdout(tmp_path):
    out = tmp_path / "k.json"
    direct = run("elliptic", "K", "--k", "0.3")
    to_file = run("elliptic", "K", "--k", "0.3", "--out", str(out))
    assert to_file.returncode == 0 and to_file.stdout == ""
    assert out.read_text() == direct.stdout
