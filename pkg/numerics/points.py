"""Points with exact rational coordinates and finite point sets."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from config import Limits
from errors import DimensionMismatchError, InputError, SizeCapError
from .rational import RationalLike, to_rational

Point = Tuple[Fraction, ...]


def make_point(coords: Iterable[RationalLike]) -> Point:
    return tuple(to_rational(c) for c in coords)


def squared_distance(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    """Exact squared Euclidean distance ``sum((p_i - q_i)^2)``."""

    if len(p) != len(q):
        raise DimensionMismatchError(f"dimension mismatch: {len(p)} vs {len(q)}")
    total = Fraction(0)
    for a, b in zip(p, q):
        d = a - b
        total += d * d
    return total


@dataclass(frozen=True)
class PointSet:
    """Immutable ordered set of distinct points sharing one dimension."""

    dimension: int
    points: Tuple[Point, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise InputError("dimension must be positive")
        pts = tuple(make_point(p) for p in self.points)
        for p in pts:
            if len(p) != self.dimension:
                raise DimensionMismatchError(
                    f"point {p} has dimension {len(p)}, expected {self.dimension}"
                )
        if len(set(pts)) != len(pts):
            raise InputError("point set contains duplicate points")
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != len(pts):
                raise InputError("labels must match the number of points")
            object.__setattr__(self, "labels", labels)

    # ------------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, index: int) -> Point:
        return self.points[index]

    def subset(self, indices: Iterable[int]) -> "PointSet":
        idx = list(indices)
        labels = tuple(self.labels[i] for i in idx) if self.labels else None
        return PointSet(self.dimension, tuple(self.points[i] for i in idx), labels)

    def translate(self, offset: Sequence[RationalLike]) -> "PointSet":
        t = make_point(offset)
        if len(t) != self.dimension:
            raise DimensionMismatchError("translation has the wrong dimension")
        moved = tuple(tuple(a + b for a, b in zip(p, t)) for p in self.points)
        return PointSet(self.dimension, moved, self.labels)


def scale_pointset(ps: PointSet, factor: RationalLike) -> PointSet:
    """Multiply every coordinate by ``factor`` (> 0)."""

    lam = to_rational(factor)
    if lam <= 0:
        raise InputError("scale factor must be positive")
    scaled = tuple(tuple(lam * c for c in p) for p in ps.points)
    return PointSet(ps.dimension, scaled, ps.labels)


def generate_grid(
    dimension: int,
    side: int,
    denominator: int = 1,
    limits: Optional[Limits] = None,
) -> PointSet:
    """All points ``(i_1/d, ..., i_n/d)`` with ``0 <= i_j <= side``."""

    if dimension < 1:
        raise InputError("dimension must be >= 1")
    if side < 0:
        raise InputError("side must be >= 0")
    if denominator < 1:
        raise InputError("denominator must be >= 1")
    cap = (limits or Limits.from_env()).max_points
    count = (side + 1) ** dimension
    if count > cap:
        raise SizeCapError("grid", count, cap)
    axis: List[Fraction] = [Fraction(i, denominator) for i in range(side + 1)]
    pts = tuple(itertools.product(axis, repeat=dimension))
    return PointSet(dimension, pts)


def find_translates(ps: PointSet, pattern: Sequence[Sequence[RationalLike]]) -> List[Tuple[int, ...]]:
    """Index tuples of every translate of ``pattern`` contained in ``ps``.

    The first pattern point is anchored on each point of ``ps`` in turn.
    """

    pat = [make_point(p) for p in pattern]
    if not pat:
        return []
    if any(len(p) != ps.dimension for p in pat):
        raise DimensionMismatchError("pattern has the wrong dimension")
    lookup = {p: i for i, p in enumerate(ps.points)}
    base = pat[0]
    found: List[Tuple[int, ...]] = []
    for anchor in ps.points:
        shift = tuple(a - b for a, b in zip(anchor, base))
        hits = []
        for p in pat:
            idx = lookup.get(tuple(a + s for a, s in zip(p, shift)))
            if idx is None:
                break
            hits.append(idx)
        else:
            found.append(tuple(hits))
    return found


__all__ = [
    "Point",
    "PointSet",
    "make_point",
    "squared_distance",
    "scale_pointset",
    "generate_grid",
    "find_translates",
]
