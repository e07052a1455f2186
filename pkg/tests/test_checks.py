import json

import jsonschema
import pytest

from zeromode import checks
from zeromode import closed_forms as cf
from zeromode import cli


def test_registry_names_unique():
    names = [name for name, _ in checks.REGISTRY]
    assert len(names) == len(set(names))


def test_report_schema_and_status(capsys):
    results = checks.run_oracle_suite()
    report = checks.build_report(results)
    jsonschema.validate(report, checks.REPORT_SCHEMA)
    assert report["ok"], [c for c in report["checks"] if c["status"] == checks.FAIL]
    assert [c["name"] for c in report["checks"]] == [name for name, _ in checks.REGISTRY]
    assert report["summary"][checks.DIVERGENT] == 2
    timed = checks.build_report(results, timings=True)
    jsonschema.validate(timed, checks.REPORT_SCHEMA)
    assert all("wall_time" in c for c in timed["checks"])
    assert all("wall_time" not in c for c in report["checks"])


def test_documented_discrepancies_are_registered():
    by_name = {r.name: r for r in checks.run_oracle_suite(
        ["closed_form.plane_wave_trace", "lattice.three_site_matrix"])}
    assert by_name["closed_form.plane_wave_trace"].status == checks.PASS
    assert "discrepancy" in by_name["closed_form.plane_wave_trace"].note
    assert "discrepancy" in by_name["lattice.three_site_matrix"].note


def test_perturbed_xi_formula_is_caught(monkeypatch, capsys):
    original = cf.xi_of_R
    monkeypatch.setattr(cf, "xi_of_R", lambda r: original(r) + 1e-3 if 0 < r < 1 else original(r))
    results = checks.run_oracle_suite(["closed_form.grid_oracle_R0.5", "closed_form.xi_triangle"])
    assert all(r.status == checks.FAIL for r in results)
    code = cli.main(["oracle", "--check", "closed_form.grid_oracle_R0.5"])
    capsys.readouterr()
    assert code == 1


def test_exception_inside_check_is_a_failure(monkeypatch):
    def boom():
        raise RuntimeError("broken")
    monkeypatch.setattr(checks, "REGISTRY", [("x.boom", boom)])
    (res,) = checks.run_oracle_suite()
    assert res.status == checks.FAIL and "broken" in res.note
    jsonschema.validate(checks.build_report([res]), checks.REPORT_SCHEMA)
