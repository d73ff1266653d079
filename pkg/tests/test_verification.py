import json

import pytest

from octachain import closed_forms as cf
from octachain import verification as ver

EXPECTED_CHECK_NAMES = {
    "bipartite_parity",
    "block_spectrum_union",
    "degree_product",
    "dk_charpoly_route",
    "dk_resistance_route",
    "kemeny_oracle_match",
    "la_coeff_z1",
    "la_coeff_z2",
    "la_deleted_minors",
    "la_minor_sum",
    "lambda_max_bipartite",
    "ls_coeff_z1",
    "ls_determinant",
    "ls_deleted_minors",
    "ls_minor_sum",
    "published_dk",
    "published_trees",
    "q_minors_phase0",
    "q_minors_phase1",
    "recip_alpha_vieta",
    "tree_count_oracle",
    "w_minors_phase0",
    "w_minors_phase1",
    "w_minors_phase2",
    "xi_vieta",
}


@pytest.fixture(scope="module")
def report3():
    return ver.run_verification(3)


def test_all_strict_checks_pass(report3):
    bad = [c for c in report3.checks if not c.passed and not c.informational]
    assert bad == []
    assert report3.summary["failed"] == 0


def test_summary_counts_consistent(report3):
    checks = report3.checks
    assert report3.summary["total"] == len(checks)
    assert report3.summary["passed"] == sum(1 for c in checks if c.passed)
    assert report3.summary["informational"] == sum(1 for c in checks if c.informational)


def test_check_name_coverage():
    report = ver.run_verification(2)
    assert {c.name for c in report.checks} == EXPECTED_CHECK_NAMES
    assert report.summary["total"] == 2 * len(EXPECTED_CHECK_NAMES)


def test_checks_sorted(report3):
    keys = [(c.name, c.n) for c in report3.checks]
    assert keys == sorted(keys)


def test_published_dk_policy(report3):
    by_n = {c.n: c for c in report3.checks if c.name == "published_dk"}
    assert by_n[1].passed and not by_n[1].informational
    for n in (2, 3):
        assert by_n[n].informational
        assert not by_n[n].passed
        assert by_n[n].note


def test_published_trees_all_match(report3):
    rows = [c for c in report3.checks if c.name == "published_trees"]
    assert len(rows) == 3
    assert all(c.passed for c in rows)


def test_check_fields(report3):
    for c in report3.checks:
        assert c.mode in ("exact", "numeric")
        if c.mode == "exact":
            assert c.tolerance is None
        else:
            assert isinstance(c.tolerance, float)
        assert isinstance(c.expected, str)
        assert isinstance(c.actual, str)


def test_report_json_round_trip(report3):
    data = json.loads(ver.report_to_json(report3))
    assert set(data) == {"checks", "summary"}
    assert data["summary"] == report3.summary
    assert len(data["checks"]) == len(report3.checks)
    first = data["checks"][0]
    assert set(first) == {
        "name",
        "n",
        "expected",
        "actual",
        "mode",
        "tolerance",
        "passed",
        "informational",
        "note",
    }


def test_mutated_closed_form_detected(monkeypatch):
    monkeypatch.setattr(cf, "spanning_trees", lambda n: 999)
    report = ver.run_verification(2)
    assert report.summary["failed"] > 0
    failing = {c.name for c in report.checks if not c.passed and not c.informational}
    assert "tree_count_oracle" in failing or "published_trees" in failing


def test_invalid_n_max():
    with pytest.raises(ValueError):
        ver.run_verification(0)
