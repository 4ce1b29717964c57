from __future__ import annotations

import json

import pytest

from dilute import verify as vf


def test_suite_names():
    assert set(vf.SUITES) == {"algebra", "bratteli", "ybe", "ybe-properties", "markov", "wreath"}


def test_unknown_suite():
    with pytest.raises(KeyError):
        vf.run_suite("nope")


def test_ybe_suite_has_six_checks():
    report = vf.run_suite("ybe")
    assert [c.name for c in report.checks] == ["YBE", "unit", "commutation", "crossing",
                                               "braid-limit", "idempotent-form"]
    assert report.ok


@pytest.mark.parametrize("name", ["algebra", "bratteli", "ybe-properties", "markov"])
def test_suites_pass(name):
    report = vf.run_suite(name)
    assert report.ok, [c.name for c in report.checks if not c.ok]


def test_wreath_suite_reports_literal_failure():
    report = vf.run_suite("wreath")
    failed = {c.name for c in report.checks if not c.ok}
    assert failed == {
        "rho^(1) (x) rho^(n): lower subspace carries rho^(n-1)",
        "rho^(1) (x) rho^(n): characters of rho^(n-1) + rho^(n+1)",
    }
    assert all(c.witness is not None for c in report.checks if not c.ok)


def test_report_json_deterministic():
    a = vf.run_suite("ybe").to_json()
    b = vf.run_suite("ybe").to_json()
    a.pop("seconds", None)
    b.pop("seconds", None)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_table_mentions_every_check():
    report = vf.run_suite("ybe")
    table = report.table()
    assert all(c.name in table for c in report.checks)
