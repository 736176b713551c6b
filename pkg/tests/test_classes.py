from fractions import Fraction

import numpy as np
import pytest

from config import Limits
from errors import InputError, SizeCapError, UnknownClassError
from extremal.fixtures import johnson_fixture, square_fixture
from graphs.classes import SELF_CLASS, DistanceClassMatrix, classify
from graphs.codec import load_space, matrix_from_dict, matrix_to_dict, save_space
from numerics.points import PointSet, generate_grid


def test_classify_unit_square():
    m = classify(square_fixture())
    assert m.class_ids() == [1, 2]
    assert m.class_table == {1: Fraction(1), 2: Fraction(2)}
    assert m.class_frequencies() == {1: 4, 2: 2}
    assert all(m.class_of(i, i) == SELF_CLASS for i in range(4))


def test_classify_rational_coordinates():
    ps = PointSet(1, ((0,), (Fraction(1, 2),), (Fraction(3, 2),)))
    m = classify(ps)
    assert m.class_table == {1: Fraction(1, 4), 2: Fraction(1), 3: Fraction(9, 4)}
    assert m.id_for(Fraction(1)) == 2
    assert m.id_for(Fraction(7)) is None


def test_johnson_squared_distances():
    m = classify(johnson_fixture(3, 2))
    assert m.size == 6
    assert sorted(m.class_table.values()) == [Fraction(2), Fraction(4)]


def test_classify_cap():
    with pytest.raises(SizeCapError):
        classify(generate_grid(2, 5), Limits(max_graph_vertices=10))


def test_matrix_validation():
    with pytest.raises(InputError):
        DistanceClassMatrix(np.array([[0, 1], [2, 0]]))
    with pytest.raises(InputError):
        DistanceClassMatrix(np.array([[1, 1], [1, 0]]))
    with pytest.raises(InputError):
        DistanceClassMatrix(np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0]]), {1: Fraction(4), 2: Fraction(1)})


def test_check_classes_unknown():
    m = classify(square_fixture())
    with pytest.raises(UnknownClassError):
        m.check_classes([3])


def test_submatrix_keeps_ids():
    m = classify(generate_grid(1, 3))
    sub = m.submatrix([0, 2])
    assert sub.class_ids() == [2]
    assert sub.squared_distance_of(2) == Fraction(4)


def test_matrix_json_roundtrip(tmp_path):
    m = classify(square_fixture())
    back = matrix_from_dict(matrix_to_dict(m))
    assert np.array_equal(back.classes, m.classes)
    assert back.class_table == m.class_table
    path = tmp_path / "m.json"
    save_space(m, str(path))
    loaded = load_space(str(path))
    assert isinstance(loaded, DistanceClassMatrix)
    assert np.array_equal(loaded.classes, m.classes)
