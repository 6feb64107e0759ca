import json
import subprocess
import sys

import numpy as np
import pytest

from gbx.cli import main
from gbx.verify import ConfigError, RunConfig, VerificationReport, run_algebra_suite


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, [json.loads(line) for line in out.splitlines()], err


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    _, err = capsys.readouterr()
    return info.value.code, err


# -- configuration -------------------------------------------------------------


@pytest.mark.parametrize(
    "kwargs",
    [
        {"alpha": 0.0},
        {"beta": 0.0},
        {"samples": 0},
        {"seed": -1},
        {"seed": 2**64},
        {"tol_rel": 0.0},
        {"tol_abs": -1e-12},
    ],
)
def test_run_config_validation(kwargs):
    with pytest.raises(ConfigError):
        RunConfig(**kwargs)


def test_report_round_trip():
    report = run_algebra_suite(RunConfig(samples=50, seed=1))
    text = report.to_json()
    again = VerificationReport.from_json(text)
    assert again == report
    assert again.to_json() == text


# -- algebra -------------------------------------------------------------------


def test_algebra_default_run(capsys):
    code, reports, err = run(capsys, "verify", "algebra", "--alpha", "1", "--beta", "1", "--samples", "10000", "--seed", "42")
    assert code == 0
    (report,) = reports
    assert report["suite"] == "algebra"
    assert report["passed"]
    assert all(c["passed"] for c in report["cases"])
    assert {"name", "max_deviation", "samples", "passed"} <= set(report["cases"][0])
    assert report["config_echo"]["seed"] == 42
    assert "PASS" in err


def test_algebra_generic_parameters(capsys):
    code, reports, _ = run(capsys, "verify", "algebra", "--alpha", "-1", "--beta", "3.5", "--samples", "10000")
    assert code == 0
    assert reports[0]["passed"]


def test_zero_alpha_is_a_usage_error(capsys):
    code, err = usage_error(capsys, "verify", "algebra", "--alpha", "0")
    assert code == 2
    assert "alpha" in err


def test_failing_case_sets_exit_status(capsys):
    # a relative tolerance below what rounding can reach must fail some case
    code, reports, err = run(capsys, "verify", "algebra", "--samples", "200", "--tol-rel", "1e-30")
    assert code == 1
    assert not reports[0]["passed"]
    assert "FAIL" in err


# -- seeds ---------------------------------------------------------------------


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GBX_SEED", "7")
    _, env_reports, _ = run(capsys, "verify", "algebra", "--samples", "100")
    assert env_reports[0]["config_echo"]["seed"] == 7
    _, flag_reports, _ = run(capsys, "verify", "algebra", "--samples", "100", "--seed", "3")
    assert flag_reports[0]["config_echo"]["seed"] == 3


def test_bad_environment_seed(capsys, monkeypatch):
    monkeypatch.setenv("GBX_SEED", "seven")
    code, err = usage_error(capsys, "verify", "algebra")
    assert code == 2
    assert "GBX_SEED" in err


def test_reports_are_deterministic(capsys):
    argv = ("verify", "group", "--kind", "tj", "--samples", "500", "--seed", "11")
    main(list(argv))
    first = capsys.readouterr().out
    main(list(argv))
    second = capsys.readouterr().out
    assert first == second


# -- groups ----------------------------------------------------------------------


def test_group_ti_bicomplex(capsys):
    code, reports, _ = run(capsys, "verify", "group", "--kind", "ti", "--samples", "10000")
    assert code == 0
    assert reports[0]["context"]["kind"] == "ti"


def test_group_tij_minus_minus(capsys):
    code, reports, _ = run(capsys, "verify", "group", "--kind", "tij", "--alpha", "-1", "--beta", "-1")
    assert code == 0


def test_group_without_kind_runs_all_three(capsys):
    code, reports, _ = run(capsys, "verify", "group", "--samples", "300")
    assert code == 0
    assert [r["context"]["kind"] for r in reports] == ["ti", "tj", "tij"]
    for r in reports:
        gen = next(c for c in r["cases"] if c["name"] == "member_generation_norm_nonzero")
        assert gen["max_deviation"] == 0


# -- surfaces --------------------------------------------------------------------


def test_surface_spiral_verify(capsys):
    code, reports, _ = run(
        capsys,
        "verify", "surface", "--rule", "ti", "--alpha", "1", "--beta", "1",
        "--curve-gamma", "hyperbolic-spiral", "--curve-delta", "spiral",
        "--rate-a", "0.2", "--rate-b", "-0.1",
    )  # fmt: skip
    assert code == 0
    names = {c["name"] for c in reports[0]["cases"]}
    assert {"one_parameter_subgroup", "form_consistency", "frame_orthonormality", "tangents_left_invariant"} <= names


def test_surface_circles_include_field_match(capsys):
    code, reports, _ = run(capsys, "verify", "surface", "--rule", "tj", "--alpha", "-1", "--beta", "1", "--samples", "2000")
    assert code == 0
    names = {c["name"] for c in reports[0]["cases"]}
    assert {"coordinate_fields_match_basis", "diagonal_field_match", "unit_norm"} <= names


def test_surface_case_mismatch_lists_permitted_kinds(capsys):
    code, err = usage_error(
        capsys, "verify", "surface", "--rule", "ti", "--curve-gamma", "circle", "--curve-delta", "circle"
    )
    assert code == 2
    assert "lorentzian-circle" in err and "hyperbolic-spiral" in err


def test_surface_rejects_non_sign_parameters(capsys):
    code, _ = usage_error(capsys, "verify", "surface", "--alpha", "2")
    assert code == 2


def test_mesh_action(capsys, tmp_path):
    out = tmp_path / "tij.obj"
    code, reports, _ = run(
        capsys, "verify", "surface", "--rule", "tij", "--action", "mesh",
        "--mesh-nt", "64", "--mesh-ns", "64", "--format", "obj", "--out", str(out),
    )  # fmt: skip
    assert code == 0
    assert reports[0]["context"]["vertices"] == 4096
    text = out.read_text()
    assert text.count("\nv ") + text.startswith("v ") == 4096
    norm = next(c for c in reports[0]["cases"] if c["name"] == "mesh_unit_norm")
    assert norm["max_deviation"] <= 1e-12


def test_mesh_needs_output_path(capsys):
    code, _ = usage_error(capsys, "verify", "surface", "--action", "mesh")
    assert code == 2


def test_mesh_write_failure(capsys, tmp_path):
    code = main(["verify", "surface", "--action", "mesh", "--out", str(tmp_path / "nope" / "m.obj")])
    _, err = capsys.readouterr()
    assert code == 2
    assert "nope" in err


def test_out_copies_reports(capsys, tmp_path):
    out = tmp_path / "reports.jsonl"
    code = main(["verify", "algebra", "--samples", "100", "--out", str(out)])
    stdout = capsys.readouterr().out
    assert code == 0
    assert out.read_text() == stdout


def test_ti_minus_minus_reports_sign_check(capsys):
    _, reports, _ = run(capsys, "verify", "surface", "--alpha", "-1", "--beta", "-1", "--samples", "500")
    note = reports[0]["context"]["third_component_sign"]
    assert note["flipped_variant_max_constraint_residual"] > 1e-3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gbx", "verify", "algebra", "--samples", "50"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"]
    assert np.isfinite(json.loads(proc.stdout)["cases"][0]["max_deviation"])
