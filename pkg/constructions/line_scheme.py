"""Three-color interval scheme for the line with two forbidden distances.

The line is cut into half-open blocks ``[n*s2, (n+1)*s2)``; each block is cut
into ``m`` pieces of length ``s1`` plus a remainder piece of length ``a``
(``s2 = m*s1 + a``). Pieces alternate between the two colors of the pair
selected by ``n mod 3``. Piece membership is decided on exact rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from config import Limits
from errors import InputError, SizeCapError
from numerics.rational import RationalLike, format_rational, to_rational


class Color(IntEnum):
    RED = 0
    BLUE = 1
    GREEN = 2

    @property
    def label(self) -> str:
        return self.name.lower()


ColorPair = Tuple[Color, Color]

DEFAULT_PAIRS: Tuple[ColorPair, ColorPair, ColorPair] = (
    (Color.RED, Color.BLUE),
    (Color.GREEN, Color.RED),
    (Color.BLUE, Color.GREEN),
)


@dataclass(frozen=True)
class LineColoringScheme:
    s1: Fraction
    s2: Fraction
    m: int
    a: Fraction
    degenerate: bool
    pairs: Tuple[ColorPair, ColorPair, ColorPair] = DEFAULT_PAIRS

    @classmethod
    def build(
        cls,
        s1: RationalLike,
        s2: RationalLike,
        pairs: Optional[Sequence[Sequence[Color]]] = None,
    ) -> "LineColoringScheme":
        s1 = to_rational(s1)
        s2 = to_rational(s2)
        if s1 <= 0:
            raise InputError("s1 must be positive")
        if s2 < s1:
            raise InputError("s2 must be at least s1")
        m = math.floor(s2 / s1)
        a = s2 - m * s1
        chosen = DEFAULT_PAIRS
        if pairs is not None:
            if len(pairs) != 3 or any(len(p) != 2 for p in pairs):
                raise InputError("pairs must be three color pairs")
            chosen = tuple((Color(p[0]), Color(p[1])) for p in pairs)  # type: ignore[assignment]
        return cls(s1, s2, m, a, s1 == s2, chosen)

    def to_json(self) -> Dict[str, Any]:
        return {
            "s1": format_rational(self.s1),
            "s2": format_rational(self.s2),
            "m": self.m,
            "a": format_rational(self.a),
            "degenerate": self.degenerate,
        }


def eval_line_color(scheme: LineColoringScheme, x: RationalLike) -> Color:
    x = to_rational(x)
    if scheme.degenerate:
        return Color(math.floor(x / scheme.s1) % 2)
    n = math.floor(x / scheme.s2)
    t = x - n * scheme.s2
    if t < scheme.m * scheme.s1:
        j = math.floor(t / scheme.s1)
    else:
        j = scheme.m
    return scheme.pairs[n % 3][j % 2]


# ----------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class LineViolation:
    x: Fraction
    partner: Fraction
    distance: Fraction
    color: Color

    def to_json(self) -> Dict[str, Any]:
        return {
            "x": format_rational(self.x),
            "partner": format_rational(self.partner),
            "distance": format_rational(self.distance),
            "color": self.color.label,
        }


@dataclass
class LineVerification:
    violations: List[LineViolation] = field(default_factory=list)
    samples: int = 0
    boundary_points: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> Dict[str, Any]:
        return {
            "violations": [v.to_json() for v in self.violations],
            "samples": self.samples,
            "boundary_points": self.boundary_points,
        }


def boundary_points(
    scheme: LineColoringScheme,
    bound: Fraction,
    limits: Optional[Limits] = None,
) -> List[Fraction]:
    """Every piece endpoint in ``[-bound, bound]``, ascending.

    Raises :class:`SizeCapError` when the sweep would exceed
    ``max_line_boundary_points``.
    """

    step = scheme.s1 if scheme.degenerate else scheme.s2
    lo = math.floor(-bound / step) - 1
    hi = math.floor(bound / step) + 1
    estimate = (hi - lo + 1) * (1 if scheme.degenerate else scheme.m + 1)
    cap = (limits or Limits.from_env()).max_line_boundary_points
    if estimate > cap:
        raise SizeCapError("line boundary sweep", estimate, cap)
    points: Set[Fraction] = set()
    for n in range(lo, hi + 1):
        base = n * step
        if scheme.degenerate:
            points.add(base)
            continue
        for q in range(scheme.m + 1):
            points.add(base + q * scheme.s1)
    return sorted(p for p in points if -bound <= p <= bound)


_INT64_SPAN = 1 << 62


def _draw_int(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in ``[low, high]``, unbounded in size."""

    span = high - low + 1
    if span <= _INT64_SPAN:
        return low + int(rng.integers(0, span))
    # Extra chunk keeps the modulo bias negligible.
    chunks = span.bit_length() // 62 + 2
    value = 0
    for _ in range(chunks):
        value = (value << 62) | int(rng.integers(0, _INT64_SPAN))
    return low + value % span


def _check_point(
    scheme: LineColoringScheme,
    x: Fraction,
    found: Dict[Tuple[Fraction, Fraction], LineViolation],
) -> None:
    cx = eval_line_color(scheme, x)
    for d in sorted({scheme.s1, scheme.s2}):
        for y in (x - d, x + d):
            if eval_line_color(scheme, y) == cx:
                key = (min(x, y), d)
                if key not in found:
                    found[key] = LineViolation(min(x, y), max(x, y), d, cx)


def verify_line_scheme(
    scheme: LineColoringScheme,
    samples: int,
    bound: RationalLike,
    seed: int = 0,
    max_denominator: int = 64,
    limits: Optional[Limits] = None,
) -> LineVerification:
    """Check ``color(x) != color(x +- s)`` for both distances.

    Points checked: ``samples`` seeded random rationals in ``[-bound, bound]``
    with denominators up to ``max_denominator``, then every piece boundary in
    range together with the points just left and right of it. Numerators are
    drawn as Python ints so any ``bound`` is sampled exactly.
    """

    if samples < 1:
        raise InputError("samples must be >= 1")
    bound = to_rational(bound)
    if bound <= 0:
        raise InputError("range must be positive")
    edges = boundary_points(scheme, bound, limits)
    rng = np.random.default_rng(seed)
    found: Dict[Tuple[Fraction, Fraction], LineViolation] = {}

    for _ in range(samples):
        den = int(rng.integers(1, max_denominator + 1))
        top = math.floor(bound * den)
        num = _draw_int(rng, -top, top)
        _check_point(scheme, Fraction(num, den), found)

    piece = scheme.s1 if (scheme.degenerate or scheme.a == 0) else min(scheme.s1, scheme.a)
    eps = piece / 4
    swept = 0
    for b in edges:
        for x in (b - eps, b, b + eps):
            if -bound <= x <= bound:
                _check_point(scheme, x, found)
                swept += 1

    violations = [found[k] for k in sorted(found)]
    return LineVerification(violations, samples, swept)


def random_distance_pairs(count: int, seed: int, max_numerator: int = 12, max_denominator: int = 6) -> List[Tuple[Fraction, Fraction]]:
    """Seeded distinct rational pairs ``s1 < s2``."""

    rng = np.random.default_rng(seed)
    pairs: List[Tuple[Fraction, Fraction]] = []
    seen: Set[Tuple[Fraction, Fraction]] = set()
    while len(pairs) < count:
        a = Fraction(int(rng.integers(1, max_numerator + 1)), int(rng.integers(1, max_denominator + 1)))
        b = Fraction(int(rng.integers(1, max_numerator + 1)), int(rng.integers(1, max_denominator + 1)))
        if a == b:
            continue
        pair = (min(a, b), max(a, b))
        if pair in seen:
            continue
        seen.add(pair)
        pairs.append(pair)
    return pairs


__all__ = [
    "Color",
    "DEFAULT_PAIRS",
    "LineColoringScheme",
    "eval_line_color",
    "LineViolation",
    "LineVerification",
    "boundary_points",
    "verify_line_scheme",
    "random_distance_pairs",
]
