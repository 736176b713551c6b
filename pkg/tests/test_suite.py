import pytest

from errors import InputError
from orchestrator.models import CLAIM_BUDGET, CLAIM_FAIL, CLAIM_PASS, ClaimResult
from orchestrator.storage import SQLiteStorage
from orchestrator.suite import CLAIM_ALIASES, ClaimSuite, suite_exit_code

FAST_CLAIMS = [
    "line_clique_lower",
    "rational_plane_bipartite",
    "odd_parity_lemma",
    "cubic_lattice_triangle",
    "plane_two_distance_value",
    "k_distance_fixtures",
]


def test_fast_claims_pass():
    results = ClaimSuite().run(FAST_CLAIMS)
    assert [r.claim for r in results] == FAST_CLAIMS
    assert all(r.passed for r in results), [r.to_json() for r in results if not r.passed]
    assert suite_exit_code(results) == 0


def test_claim_details():
    suite = ClaimSuite()
    by_name = {r.claim: r for r in suite.run(["line_clique_lower", "k_distance_fixtures"])}
    assert by_name["line_clique_lower"].details["chi_by_k"] == {str(k): k + 1 for k in range(1, 7)}
    assert by_name["k_distance_fixtures"].details["sizes"]["icosahedron_matrix"] == 12


def test_zero_budget_reports_budget_status():
    results = ClaimSuite(budget=0).run(["cubic_lattice_triangle", "odd_parity_lemma"])
    assert [r.status for r in results] == [CLAIM_BUDGET, CLAIM_PASS]
    assert results[0].details["nodes_explored"] > 0
    assert suite_exit_code(results) == 2


def test_unknown_claim_is_rejected():
    with pytest.raises(InputError):
        ClaimSuite().run(["no_such_claim"])


def test_events_reach_callbacks_and_storage(tmp_path):
    storage = SQLiteStorage(str(tmp_path / "suite.db"))
    suite = ClaimSuite(storage=storage)
    seen = []
    suite.stream_events(seen.append)
    suite.stream_events(lambda event: 1 / 0)
    suite.run(["odd_parity_lemma"])
    assert [e.message for e in seen] == ["claim_started", "claim_passed"]
    stored = storage.get_events("odd_parity_lemma")
    assert [e.message for e in stored] == ["claim_started", "claim_passed"]
    storage.close()


def test_results_are_deterministic():
    first = [r.to_json() for r in ClaimSuite(seed=3).run(["odd_parity_lemma", "k_distance_fixtures"])]
    second = [r.to_json() for r in ClaimSuite(seed=3).run(["odd_parity_lemma", "k_distance_fixtures"])]
    assert first == second
    assert "elapsed_s" not in first[0]


def test_exit_code_precedence():
    ok = ClaimResult("a", CLAIM_PASS)
    budget = ClaimResult("b", CLAIM_BUDGET)
    fail = ClaimResult("c", CLAIM_FAIL)
    assert suite_exit_code([ok]) == 0
    assert suite_exit_code([ok, budget]) == 2
    assert suite_exit_code([budget, fail]) == 3


def test_aliases_select_claims():
    suite = ClaimSuite()
    assert set(CLAIM_ALIASES.values()) == set(suite.claims)
    results = suite.run(["prop5c", "prop5b_parity", "plane_two_distance_value"])
    assert [r.claim for r in results] == ["plane_two_distance_value", "odd_parity_lemma"]
    assert all(r.passed for r in results)
