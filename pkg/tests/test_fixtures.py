import math
from fractions import Fraction

import pytest

from errors import InputError, UnknownFixtureError
from extremal.fixtures import (
    fixture,
    icosahedron_matrix,
    numeric_cross_check,
    parse_fixture_name,
    regular_polygon_matrix,
)
from graphs.classes import classify
from numerics.points import PointSet


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hypercube_shape(k):
    ps = fixture(f"hypercube({k})")
    assert len(ps) == 2 ** k
    assert classify(ps).class_count == k


@pytest.mark.parametrize("n, k", [(3, 2), (4, 2), (5, 3)])
def test_johnson_shape(n, k):
    ps = fixture(f"johnson({n},{k})")
    assert len(ps) == math.comb(n + 1, k)
    assert all(sum(p) == k for p in ps)
    assert classify(ps).class_count <= k


@pytest.mark.parametrize("k", [2, 3, 4])
def test_odd_polygon_classes(k):
    m = regular_polygon_matrix(2 * k + 1)
    assert m.class_count == k
    assert m.class_table is None


def test_icosahedron_layout():
    m = icosahedron_matrix()
    assert m.size == 12
    assert m.class_frequencies() == {1: 30, 2: 30, 3: 6}


@pytest.mark.parametrize("name", ["icosahedron_matrix", "regular_polygon_matrix(5)", "regular_polygon_matrix(8)"])
def test_numeric_cross_check_agrees(name):
    check = numeric_cross_check(name)
    assert check.agrees
    assert check.min_gap > 1e-3


def test_triangle_is_equilateral():
    m = classify(fixture("triangle_Z3"))
    assert m.class_ids() == [1]
    assert m.squared_distance_of(1) == Fraction(2)


def test_line_and_square():
    line = fixture("line(4)")
    assert isinstance(line, PointSet)
    assert classify(line).class_count == 4
    assert classify(fixture("square")).class_count == 2


def test_name_parsing():
    assert parse_fixture_name("johnson(4, 2)") == ("johnson", (4, 2))
    assert parse_fixture_name("square") == ("square", ())


@pytest.mark.parametrize("name", ["dodecahedron", "line(", "square(2,3"])
def test_unknown_fixture(name):
    with pytest.raises(UnknownFixtureError):
        fixture(name)


def test_wrong_arity_and_ranges():
    with pytest.raises(InputError):
        fixture("line")
    with pytest.raises(InputError):
        fixture("johnson(3,5)")
    with pytest.raises(UnknownFixtureError):
        numeric_cross_check("square")
