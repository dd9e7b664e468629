"""Command-line interface: documented examples, exit codes, determinism."""

from __future__ import annotations

import csv
import io
import json
import shutil
import subprocess

import mpmath as mp
import pytest

from unihyper.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_gauss_example(capsys):
    code, out, _ = run(["eval", "--type", "2F1", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["value"][0] - 2 * float(mp.log(2))) < 1e-12
    assert doc["value"][1] == 0.0


def test_eval_cross_check(capsys):
    argv = ["eval", "--type", "1F1", "--a", "0.5", "--c", "1.5+0.5j", "--z", "-1.2", "--cross-check", "integral"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    doc = json.loads(out)
    ref = complex(mp.hyp1f1(0.5, 1.5 + 0.5j, -1.2))
    assert abs(complex(*doc["value"]) - ref) < 1e-12
    assert doc["cross_check"]["discrepancy"] < 1e-10


def test_eval_raw_parameters(capsys):
    """σ = z − z², κ = 1 − z, ω = −½ is the raw triple of ₂F₁(1, 1; 2)."""
    code, out, _ = run(["eval", "--sigma", "0,1,-1", "--kappa", "1,-1", "--omega", "-0.5", "--z", "0.5"], capsys)
    assert code == 0
    assert abs(json.loads(out)["value"][0] - 2 * float(mp.log(2))) < 1e-12


def test_classify_example(capsys):
    code, out, _ = run(["classify", "--sigma", "0,1,-1", "--tau", "c,-3", "--eta", "-2"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["type_tag"] == "Gauss2F1"
    a, b = complex(*doc["normal_params"]["a"]), complex(*doc["normal_params"]["b"])
    assert abs(a * b - 2) < 1e-12 and abs(a + b - 2) < 1e-12
    assert "c" in doc["free_symbols"]


def test_classify_bound_parameter(capsys):
    code, out, _ = run(["classify", "--sigma", "0,1,-1", "--tau", "c,-3", "--eta", "-2", "--param", "c=0.25"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert complex(*doc["normal_params"]["c"]) == 0.25
    assert "free_symbols" not in doc or not doc["free_symbols"]


def test_verify_lie_example(capsys):
    code, out, _ = run(["verify", "--suite", "lie", "--sigma", "1", "--kappa", "0,-2"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True


def test_verify_text_format(capsys):
    code, out, _ = run(["verify", "--suite", "chebyshev", "--format", "text"], capsys)
    assert code == 0
    assert "[PASS]" in out


def test_poly_csv_header(capsys):
    code, out, _ = run(["poly", "--family", "laguerre", "--alpha", "0.5", "--n-max", "2", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:4] == ["n", "degree", "c0_re", "c0_im"]
    assert [float(x) for x in rows[3][2:8:2]] == [1.875, -2.5, 0.5]


def test_ladder_values(capsys):
    argv = ["ladder", "--sigma", "0,1,-1", "--kappa", "1,-2", "--n-min", "0", "--n-max", "2", "--format", "csv"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [float(r["omega_re"]) for r in rows] == [0.0, -3.0, -8.0]
    assert [float(r["kappa1_re"]) for r in rows] == [-2.0, -4.0, -6.0]


def test_plot_data(capsys):
    code, out, _ = run(["plot-data", "--type", "1F1", "--a", "1", "--c", "2", "--points", "5"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 5
    for r in rows:
        z = float(r["z_re"])
        assert abs(float(r["value_re"]) - float(mp.hyp1f1(1, 2, z))) < 1e-12


def test_usage_and_domain_errors_exit_2(capsys):
    assert run(["eval", "--type", "2F1", "--a", "1", "--b", "1", "--c", "2", "--z", "1.5"], capsys)[0] == 2
    assert run(["eval", "--type", "2F1", "--a", "x", "--b", "1", "--c", "2", "--z", "0.5"], capsys)[0] == 2
    code, _, err = run(["eval", "--type", "2F1", "--sigma", "1", "--z", "0.5"], capsys)
    assert code == 2 and "mutually exclusive" in err
    assert run(["frobnicate"], capsys)[0] == 2


def test_verify_failure_exit_1(capsys, monkeypatch):
    import unihyper.cli as cli
    import unihyper.suites as suites

    def failing(name, seed=0, params=None):
        res = suites.SuiteResult(name, suites.SUITE_CRITERIA[name])
        res.add("forced", 1.0, 1e-12)
        return res

    monkeypatch.setattr(cli, "run_suite", failing, raising=False)
    monkeypatch.setattr(suites, "run_suite", failing)
    code, out, _ = run(["verify", "--suite", "lie"], capsys)
    assert code == 1


def test_json_is_byte_identical(capsys):
    argv = ["classify", "--sigma", "0,1,-1", "--tau", "c,-3", "--eta", "-2"]
    first = run(argv, capsys)[1]
    second = run(argv, capsys)[1]
    assert first == second
    argv = ["verify", "--suite", "degenerate"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


@pytest.mark.skipif(shutil.which("unihyper") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(
        ["unihyper", "eval", "--type", "0F1", "--c", "1", "--z", "0.25"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert abs(json.loads(proc.stdout)["value"][0] - float(mp.hyp0f1(1, 0.25))) < 1e-12
