import numpy as np
import pytest

from config import Limits
from errors import InputError, SizeCapError
from extremal.fixtures import fixture, hypercube_fixture, line_fixture
from extremal.kdistance import kdistance_bruteforce, max_k_distance_set
from graphs.classes import DistanceClassMatrix, classify
from graphs.graph import build_graph
from numerics.points import generate_grid


@pytest.mark.parametrize(
    "name, k, expected",
    [
        ("line(5)", 2, 3),
        ("square", 2, 4),
        ("hypercube(3)", 3, 8),
        ("johnson(3,2)", 2, 6),
        ("icosahedron_matrix", 3, 12),
        ("regular_polygon_matrix(5)", 2, 5),
        ("regular_polygon_matrix(6)", 1, 3),
    ],
)
def test_fixture_targets(name, k, expected):
    space = fixture(name)
    m = space if isinstance(space, DistanceClassMatrix) else classify(space)
    result = max_k_distance_set(m, k)
    assert result.size == expected
    assert result.optimal
    assert result.verify(m)


@pytest.mark.parametrize("k", [1, 2])
def test_search_matches_oracle_on_cube(k):
    m = classify(hypercube_fixture(3))
    assert max_k_distance_set(m, k).size == kdistance_bruteforce(m, k).size


def test_single_distance_on_line_is_a_pair():
    result = max_k_distance_set(classify(line_fixture(6)), 1)
    assert result.size == 2
    assert result.class_count == 1


def test_search_matches_bruteforce_on_random_instances():
    rng = np.random.default_rng(20)
    window = generate_grid(2, 4)
    for _ in range(100):
        n = int(rng.integers(2, 11))
        k = int(rng.integers(1, 4))
        pick = sorted(int(v) for v in rng.choice(len(window), size=n, replace=False))
        m = classify(window.subset(pick))
        found = max_k_distance_set(m, k)
        oracle = kdistance_bruteforce(m, k)
        assert found.size == oracle.size, (pick, k)
        assert found.verify(m)
        assert oracle.verify(m)


def test_budget_exhaustion_keeps_a_valid_subset():
    m = classify(generate_grid(2, 3))
    result = max_k_distance_set(m, 2, budget=1)
    assert not result.optimal
    assert result.nodes_explored > 1
    assert result.verify(m)
    assert result.size >= 1


def test_k_distance_set_is_clique_of_its_classes():
    m = classify(generate_grid(2, 3))
    result = max_k_distance_set(m, 2)
    g = build_graph(m, classes=result.classes)
    assert g.is_clique(result.subset)
    assert result.to_json()["size"] == result.size


def test_bad_arguments():
    m = classify(line_fixture(3))
    with pytest.raises(InputError):
        max_k_distance_set(m, 0)
    with pytest.raises(InputError):
        kdistance_bruteforce(m, 0)
    with pytest.raises(SizeCapError):
        max_k_distance_set(classify(line_fixture(20)), 2, limits=Limits(max_search_vertices=10))
    with pytest.raises(SizeCapError):
        kdistance_bruteforce(classify(line_fixture(20)), 2)
