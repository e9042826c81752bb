"""CLI behavior: output formats, exit codes, CSV determinism, manifest."""

import hashlib
import json
import subprocess
import sys

import pytest

from starrad import VerificationReport
from starrad.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_pairs(out):
    pairs = {}
    for line in out.strip().splitlines():
        key, sep, val = line.partition(" = ")
        if not sep:
            key, _, val = line.partition(" =")
        pairs[key] = val
    return pairs


def test_eval_plain(capsys):
    code, out, err = run(capsys, "eval", "--function", "phi0", "--mu", "0.5", "--z", "1")
    assert code == 0
    assert err == ""
    lines = parse_pairs(out)
    assert lines["function"] == "phi0"
    assert abs(float(lines["value"]) - 0.8902383335844293) < 1e-14
    assert int(lines["terms_used"]) < 20


def test_eval_json(capsys):
    code, out, _ = run(
        capsys, "eval", "--function", "psi_mu", "--mu", "0.5", "--c", "0.25",
        "--z", "2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["function"] == "psi_mu"
    assert payload["c"] == 0.25
    assert payload["err_bound"] < 1e-12


def test_eval_missing_param(capsys):
    code, _, err = run(capsys, "eval", "--function", "phi0", "--z", "1")
    assert code == 2
    assert "needs --mu" in err


def test_eval_unknown_function(capsys):
    code, _, err = run(capsys, "eval", "--function", "airy", "--z", "1", "--mu", "0.5")
    assert code == 2
    assert "unknown function" in err


def test_radius_plain_and_json(capsys):
    code, out, _ = run(capsys, "radius", "--family", "g", "--param", "0.5", "--alpha", "0.25")
    assert code == 0
    lines = parse_pairs(out)
    assert lines["certified"] == "true"
    assert lines["regime"] == "real-axis"
    code, out, _ = run(
        capsys, "radius", "--family", "struve-w", "--param", "0.25", "--alpha", "0",
        "--no-certify", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "w"
    assert payload["radius"] == pytest.approx(payload["equation_root"] ** 2)
    assert payload["certified"] is False


def test_radius_invalid_alpha_exits_2(capsys):
    code, _, err = run(capsys, "radius", "--family", "g", "--param", "0.5", "--alpha", "1.5")
    assert code == 2
    assert "InvalidQuery" in err


def test_radius_undefined_family_member_exits_2(capsys):
    code, _, err = run(capsys, "radius", "--family", "f", "--param", "-0.5", "--alpha", "0")
    assert code == 2
    assert "mu = -1/2" in err


def test_zeros_annotated(capsys):
    code, out, _ = run(capsys, "zeros", "--function", "phi0", "--mu", "0.5", "--count", "3")
    assert code == 0
    assert out.count("within = true") == 3
    assert "zero_01" in out


def test_zeros_too_many_exits_3(capsys):
    code, _, err = run(capsys, "zeros", "--function", "phi0", "--mu", "0.5", "--count", "40")
    assert code == 3
    assert "NoRootFound" in err


def test_eval_nonconvergent_exits_3(capsys):
    code, _, err = run(
        capsys, "eval", "--function", "phi0", "--mu", "0.5", "--z", "14",
        "--max-terms", "8",
    )
    assert code == 3
    assert "NonConvergent" in err


def test_failed_certification_exits_4(capsys, monkeypatch):
    import starrad.radius as radius_mod

    def fake_min(family, param, r, n_samples=512, cfg=None, **kw):
        return -1.0, 0.0

    monkeypatch.setattr(radius_mod, "boundary_min_real_part", fake_min)
    code, out, _ = run(capsys, "radius", "--family", "g", "--param", "0.5", "--alpha", "0")
    assert code == 4
    assert "certification failed" in out


def test_verify_ode_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ode")
    assert code == 0
    assert "PASS ode-lommel-mu0.5-z1.0" in out
    assert out.strip().endswith("32/32 checks passed")


def test_verify_failure_exits_5(capsys, monkeypatch):
    import starrad.cli as cli_mod

    fake = [VerificationReport("boom", 1.0, 0.0, False, {})]
    monkeypatch.setattr(cli_mod, "run_suite", lambda name, cfg=None: fake)
    code, out, _ = run(capsys, "verify", "--suite", "series")
    assert code == 5
    assert "FAIL boom" in out


def test_verify_unknown_suite_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nonsense"])


def test_table_csv_stdout(capsys):
    code, out, _ = run(
        capsys, "table", "--families", "g", "--params", "0.5", "--alphas", "0,0.25",
        "--no-certify", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,param,alpha,radius,equation_root,regime,residual,certified"
    assert len(lines) == 3
    assert lines[1].startswith("g,0.5,0.0,1.944427052585")


def test_table_range_syntax(capsys):
    code, out, _ = run(
        capsys, "table", "--families", "v", "--params", "0.25", "--alphas", "0:0.5:3",
        "--no-certify", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert [row["alpha"] for row in payload] == [0.0, 0.25, 0.5]


def test_table_bad_range_exits_2(capsys):
    code, _, err = run(
        capsys, "table", "--families", "g", "--params", "0.1:0.9", "--alphas", "0",
    )
    assert code == 2
    assert "start:stop:count" in err


def test_table_csv_file_determinism_and_manifest(tmp_path, capsys):
    argv = [
        "table", "--families", "f,g", "--params=-0.5,0.5", "--alphas", "0,0.5",
        "--no-certify",
    ]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["--output", str(a)]) == 0
    assert main(argv + ["--output", str(b)]) == 0
    capsys.readouterr()
    data_a, data_b = a.read_bytes(), b.read_bytes()
    assert data_a == data_b
    text = data_a.decode()
    assert "f,-0.5,0.0,,,,,\n" in text  # error rows keep the key, drop the rest
    manifest = json.loads((tmp_path / "a.csv.manifest.json").read_text())
    assert manifest["data_sha256"] == hashlib.sha256(data_a).hexdigest()
    assert manifest["rows"] == 8
    statuses = {(r["family"], r["param"], r["status"]) for r in manifest["row_status"]}
    assert ("f", -0.5, "error") in statuses
    assert ("g", 0.5, "ok") in statuses
    errs = [r for r in manifest["row_status"] if r["status"] == "error"]
    assert all(r["error"].startswith("InvalidQuery") for r in errs if r["family"] == "f")


def test_env_tolerance_is_respected(capsys, monkeypatch):
    code, out, _ = run(capsys, "eval", "--function", "phi0", "--mu", "0.5", "--z", "5")
    tight = int(parse_pairs(out)["terms_used"])
    monkeypatch.setenv("STARRAD_TOL", "1e-4")
    code, out, _ = run(capsys, "eval", "--function", "phi0", "--mu", "0.5", "--z", "5")
    loose = int(parse_pairs(out)["terms_used"])
    assert code == 0
    assert loose < tight


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "starrad", "--version"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.strip() == "starrad 0.1.0"
