from fractions import Fraction

import pytest

from constructions.parity import (
    DistanceKind,
    check_odd_parity_solution,
    distance_kind,
    enumerate_odd_parity_solutions,
    is_twice_odd,
)
from errors import InputError, ParityPreconditionError
from graphs.classes import classify
from graphs.graph import build_graph
from numerics.points import generate_grid
from solver import bipartition


@pytest.mark.parametrize("a, b, c, p, q", [(1, 1, 1, 1, 1), (7, 1, 5, 1, 1), (3, 1, 1, 5, 1)])
def test_known_solutions_are_all_odd(a, b, c, p, q):
    verdict = check_odd_parity_solution(a, b, c, p, q)
    assert verdict.all_odd
    assert verdict.to_json()["all_odd"] is True


def test_enumeration_finds_primitive_solutions():
    found = enumerate_odd_parity_solutions(1, 1, 5)
    assert (1, 1, 1) in found
    assert (7, 1, 5) in found
    assert (5, 5, 5) not in found
    assert enumerate_odd_parity_solutions(3, 1, 10) == []


def test_enumerated_solutions_satisfy_equation():
    for a, b, c in enumerate_odd_parity_solutions(1, 5, 40):
        assert 5 * (a * a + b * b) == 2 * c * c
        assert a >= b >= 0


def test_every_primitive_solution_is_odd():
    odd = [1, 3, 5, 7, 9]
    checked = 0
    for p in odd:
        for q in odd:
            for a, b, c in enumerate_odd_parity_solutions(p, q, 50):
                assert check_odd_parity_solution(a, b, c, p, q).all_odd, (a, b, c, p, q)
                checked += 1
    assert checked > 0


@pytest.mark.parametrize(
    "args",
    [
        (1, 1, 1, 2, 1),  # even p
        (1, 1, 1, 1, -1),  # negative q
        (1, 1, 0, 1, 1),  # c not positive
        (2, 2, 2, 1, 1),  # not primitive
        (1, 2, 1, 1, 1),  # equation fails
    ],
)
def test_check_preconditions(args):
    with pytest.raises(ParityPreconditionError):
        check_odd_parity_solution(*args)


def test_enumerate_rejects_bad_bounds():
    with pytest.raises(InputError):
        enumerate_odd_parity_solutions(1, 1, 0)
    with pytest.raises(ParityPreconditionError):
        enumerate_odd_parity_solutions(4, 1, 5)


@pytest.mark.parametrize(
    "squared, kind, p, q, scale",
    [
        (Fraction(2), DistanceKind.TWICE_ODD_RATIO, 1, 1, Fraction(1)),
        (Fraction(10), DistanceKind.TWICE_ODD_RATIO, 5, 1, Fraction(1)),
        (Fraction(50), DistanceKind.TWICE_ODD_RATIO, 25, 1, Fraction(1)),
        (Fraction(1), DistanceKind.ODD_RATIO, 1, 1, Fraction(1)),
        (Fraction(8), DistanceKind.TWICE_ODD_RATIO, 1, 1, Fraction(4)),
        (Fraction(1, 2), DistanceKind.TWICE_ODD_RATIO, 1, 1, Fraction(1, 4)),
        (Fraction(3, 4), DistanceKind.ODD_RATIO, 3, 1, Fraction(1, 4)),
    ],
)
def test_distance_kind(squared, kind, p, q, scale):
    d = distance_kind(squared)
    assert (d.kind, d.p, d.q, d.scale) == (kind, p, q, scale)
    factor = 2 if kind is DistanceKind.TWICE_ODD_RATIO else 1
    assert d.scale * factor * Fraction(d.p, d.q) == squared


def test_distance_kind_rejects_non_positive():
    with pytest.raises(InputError):
        distance_kind(Fraction(0))


@pytest.mark.parametrize("squared", [2, 10, 50])
def test_twice_odd_distances_give_bipartite_grid_graphs(squared):
    m = classify(generate_grid(2, 6))
    g = build_graph(m, distances=[Fraction(squared)])
    assert is_twice_odd(Fraction(squared))
    assert g.edge_count > 0
    result = bipartition(g)
    assert result.is_bipartite
    assert result.verify(g)
