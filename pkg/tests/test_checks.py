"""The verification registry: id hygiene, report shape, and a fast pass
over every check at reduced budgets."""

import json

import pytest

from chordlab.checks import CHECKS, check_ids, run_check, run_many

EXPECTED_MODULES = {
    "diagram",
    "structure",
    "patterns",
    "bijections",
    "series",
    "enumeration",
    "harness",
}


def test_registry_covers_every_module():
    assert {c.module for c in CHECKS.values()} == EXPECTED_MODULES
    assert len(check_ids()) == len(set(check_ids()))
    for check in CHECKS.values():
        assert check.description
        assert check.budget >= 1


def test_pinned_check_id_exists():
    assert "thm-equation-sol" in CHECKS


def test_unknown_id_raises():
    with pytest.raises(KeyError):
        run_check("no-such-id")


def test_single_check_report_shape():
    rep = run_check("series-y-degree", budget=3)
    assert rep["ok"]
    assert rep["id"] == "series-y-degree"
    assert rep["budget"] == 3
    assert set(rep) == {"id", "module", "description", "budget", "ok", "details"}
    # payload carries no timing and serializes deterministically
    assert json.dumps(rep, sort_keys=True) == json.dumps(run_check("series-y-degree", 3), sort_keys=True)


def test_run_many_subset():
    rep = run_many(["core-pair-statistics", "core-text-roundtrip"], budget=3)
    assert rep["ok"]
    assert [r["id"] for r in rep["checks"]] == [
        "core-pair-statistics",
        "core-text-roundtrip",
    ]


@pytest.mark.parametrize("check_id", sorted(CHECKS))
def test_every_check_passes_at_smoke_budget(check_id):
    budget = min(CHECKS[check_id].budget, 4)
    rep = run_check(check_id, budget=budget)
    assert rep["ok"], rep["details"]
