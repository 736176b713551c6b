from fractions import Fraction

import numpy as np
import pytest

from constructions.line_scheme import (
    Color,
    LineColoringScheme,
    boundary_points,
    eval_line_color,
    random_distance_pairs,
    verify_line_scheme,
)
from config import Limits
from errors import InputError, SizeCapError


@pytest.mark.parametrize(
    "s1, s2, x, expected",
    [
        ("1", "2", "0", Color.RED),
        ("1", "2", "3", Color.RED),
        ("2", "3", "5/2", Color.BLUE),
        ("1", "2", "2", Color.GREEN),
        ("1", "2", "-1/2", Color.GREEN),
    ],
)
def test_eval_line_color_examples(s1, s2, x, expected):
    scheme = LineColoringScheme.build(s1, s2)
    assert eval_line_color(scheme, x) is expected


def test_degenerate_scheme_alternates_two_colors():
    scheme = LineColoringScheme.build(1, 1)
    assert scheme.degenerate
    assert eval_line_color(scheme, "7/2") == 1
    colors = {eval_line_color(scheme, Fraction(i, 3)) for i in range(-30, 30)}
    assert colors == {Color.RED, Color.BLUE}


def test_scheme_decomposition():
    scheme = LineColoringScheme.build("2/3", "17/6")
    assert scheme.m == 4
    assert scheme.a == Fraction(1, 6)
    assert scheme.s2 == scheme.m * scheme.s1 + scheme.a


def test_build_rejects_bad_distances():
    with pytest.raises(InputError):
        LineColoringScheme.build(3, 2)
    with pytest.raises(InputError):
        LineColoringScheme.build(0, 2)
    with pytest.raises(InputError):
        LineColoringScheme.build("0.5", 2)


@pytest.mark.parametrize("s1, s2", [(1, 2), (2, 3)])
def test_verify_reports_no_violations(s1, s2):
    report = verify_line_scheme(LineColoringScheme.build(s1, s2), samples=1000, bound=100, seed=7)
    assert report.ok
    assert report.samples == 1000
    assert report.boundary_points > 0


def test_random_pairs_have_no_violations():
    pairs = random_distance_pairs(100, seed=0)
    assert len(set(pairs)) == 100
    assert all(s1 < s2 for s1, s2 in pairs)
    for i, (s1, s2) in enumerate(pairs):
        report = verify_line_scheme(LineColoringScheme.build(s1, s2), samples=200, bound=20, seed=i)
        assert report.ok, (s1, s2, report.to_json())


def test_never_more_than_three_colors():
    rng = np.random.default_rng(1)
    scheme = LineColoringScheme.build("3/4", "5/2")
    xs = [Fraction(int(rng.integers(-500, 500)), int(rng.integers(1, 9))) for _ in range(500)]
    assert len({eval_line_color(scheme, x) for x in xs}) <= 3


def test_corrupted_pairs_are_caught_at_boundaries():
    corrupted = LineColoringScheme.build(
        1, 2, pairs=((Color.RED, Color.BLUE), (Color.RED, Color.BLUE), (Color.BLUE, Color.GREEN))
    )
    report = verify_line_scheme(corrupted, samples=1, bound=10, seed=0)
    assert not report.ok
    assert any(v.x == 0 and v.distance == 2 for v in report.violations)
    assert report.to_json()["violations"][0]["color"] in {"red", "blue", "green"}


def test_boundary_points_cover_all_piece_ends():
    scheme = LineColoringScheme.build(2, 5)
    points = boundary_points(scheme, Fraction(10))
    assert points == [Fraction(v) for v in (-10, -8, -6, -5, -3, -1, 0, 2, 4, 5, 7, 9, 10)]


def test_verify_handles_ranges_beyond_int64():
    scheme = LineColoringScheme.build(40000000000000000000, 90000000000000000000)
    report = verify_line_scheme(scheme, samples=50, bound=10**20, seed=1)
    assert report.ok
    assert report.violations == []


def test_boundary_sweep_is_capped():
    scheme = LineColoringScheme.build(1, 2)
    small = Limits(max_line_boundary_points=50)
    assert boundary_points(scheme, Fraction(5), small)
    with pytest.raises(SizeCapError):
        boundary_points(scheme, Fraction(100), small)
    with pytest.raises(SizeCapError):
        verify_line_scheme(scheme, samples=1, bound=10**20)
