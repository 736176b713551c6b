import json
from fractions import Fraction

import pytest

from errors import InputError
from extremal.fixtures import fixture, line_fixture
from extremal.ledger import bound_report, forbidden_selection
from graphs.classes import classify
from numerics.points import PointSet, generate_grid


def test_grid_with_unit_and_diagonal_concludes_four():
    ledger = bound_report(generate_grid(2, 5), 2, distances=[Fraction(1), Fraction(2)])
    assert ledger.lower.value == 4
    assert ledger.upper.value == 4
    assert ledger.concluded == 4
    assert ledger.strategy["mode"] == "explicit"
    assert [f["method"] for f in ledger.upper.certificate["factors"]] == ["bipartition", "bipartition"]


def test_line_lower_bound_is_clique():
    ledger = bound_report(line_fixture(3), 3)
    assert ledger.strategy["mode"] == "all_classes"
    assert ledger.lower.value == 4
    assert ledger.upper.value == 8
    assert ledger.concluded is None


def test_johnson_concludes_six():
    ledger = bound_report(fixture("johnson(3,2)"), 2)
    assert ledger.lower.value == 6
    assert ledger.upper.value == 6
    assert ledger.concluded == 6
    methods = sorted(f["method"] for f in ledger.upper.certificate["factors"])
    assert methods == ["bipartition", "exact"]


def test_threads_do_not_change_the_report():
    space = generate_grid(2, 3)
    single = bound_report(space, 2, threads=1)
    pooled = bound_report(space, 2, threads=2)
    assert json.dumps(single.to_json(), sort_keys=True) == json.dumps(pooled.to_json(), sort_keys=True)
    assert single.strategy == {"mode": "all_k_subsets", "sets_tried": 36, "seed": 0}
    assert single.lower.value <= single.upper.value


def test_unrealized_distance_is_noted():
    ledger = bound_report(generate_grid(2, 3), 2, distances=[Fraction(1), Fraction(7)])
    assert "squared distance 7 unrealized" in ledger.notes
    assert ledger.lower.value == 2


def test_budget_falls_back_to_clique():
    ledger = bound_report(generate_grid(2, 5), 2, distances=[Fraction(1), Fraction(2)], budget=0)
    assert ledger.lower.certificate["type"] == "clique"
    assert any("exhausted" in note for note in ledger.notes)
    assert ledger.upper.value == 4


def test_bad_arguments():
    space = generate_grid(2, 3)
    with pytest.raises(InputError):
        bound_report(space, 0)
    with pytest.raises(InputError):
        bound_report(space, 2, threads=0)
    with pytest.raises(InputError):
        bound_report(space, 1, classes=[1, 2])


def test_selection_modes():
    assert forbidden_selection(classify(PointSet(2, ((0, 0),))), 2) == ([], "no_classes")
    sets, mode = forbidden_selection(classify(fixture("square")), 2)
    assert (sets, mode) == ([(1, 2)], "all_classes")
    grid = classify(generate_grid(2, 3))
    sets, mode = forbidden_selection(grid, 2)
    assert mode == "all_k_subsets"
    assert len(sets) == 36


def test_sampled_selection_is_seeded():
    grid = classify(generate_grid(2, 3))
    first, mode = forbidden_selection(grid, 2, seed=5, exhaustive_limit=5, random_count=10)
    again, _ = forbidden_selection(grid, 2, seed=5, exhaustive_limit=5, random_count=10)
    assert mode == "frequent_plus_random"
    assert first == again
    assert 1 < len(first) <= 11
    assert len(set(first)) == len(first)
    freq = grid.class_frequencies()
    assert sorted(freq[c] for c in first[0]) == sorted(freq.values())[-2:]
