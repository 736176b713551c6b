"""Named point configurations used as lower-bound witnesses.

Coordinate fixtures are exact rational point sets. Configurations with
irrational coordinates (regular polygons, the icosahedron) are shipped as
class matrices built from their combinatorial structure; their class layout
is cross-checked once against float64 coordinates.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from config import Limits
from errors import CertificateError, InputError, SizeCapError, UnknownFixtureError
from graphs.classes import DistanceClassMatrix
from numerics.points import PointSet

Space = Union[PointSet, DistanceClassMatrix]

FIXTURE_NAMES = (
    "line(k)",
    "square",
    "hypercube(k)",
    "johnson(n,k)",
    "triangle_Z3",
    "regular_polygon_matrix(m)",
    "icosahedron_matrix",
)

CROSS_CHECK_TOLERANCE = 1e-9

_NAME_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\(\s*(\d+(?:\s*,\s*\d+)*)\s*\))?$")

_PHI = (1 + math.sqrt(5)) / 2


def parse_fixture_name(name: str) -> Tuple[str, Tuple[int, ...]]:
    match = _NAME_RE.match(name.strip())
    if not match:
        raise UnknownFixtureError(f"malformed fixture name {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    args = tuple(int(a) for a in match.group(2).split(",")) if match.group(2) else ()
    return match.group(1), args


def _arity(base: str, args: Tuple[int, ...], expected: int) -> None:
    if len(args) != expected:
        raise InputError(f"{base} takes {expected} integer argument(s), got {len(args)}")


def _cap(what: str, count: int, limits: Optional[Limits]) -> None:
    cap = (limits or Limits.from_env()).max_points
    if count > cap:
        raise SizeCapError(what, count, cap)


# ----------------------------------------------------------------------
# Coordinate fixtures


def line_fixture(k: int) -> PointSet:
    """``{0, 1, ..., k}`` on the line."""
    if k < 1:
        raise InputError("line(k) needs k >= 1")
    return PointSet(1, tuple((Fraction(i),) for i in range(k + 1)))


def square_fixture() -> PointSet:
    return PointSet(2, ((0, 0), (1, 0), (0, 1), (1, 1)))


def hypercube_fixture(k: int, limits: Optional[Limits] = None) -> PointSet:
    """Vertices of ``{0,1}^k``: ``2^k`` points, ``k`` classes."""
    if k < 1:
        raise InputError("hypercube(k) needs k >= 1")
    _cap("hypercube", 2 ** k, limits)
    return PointSet(k, tuple(itertools.product((0, 1), repeat=k)))


def johnson_fixture(n: int, k: int, limits: Optional[Limits] = None) -> PointSet:
    """0/1 vectors of length ``n + 1`` with exactly ``k`` ones."""
    if n < 1 or not 1 <= k <= n + 1:
        raise InputError("johnson(n,k) needs n >= 1 and 1 <= k <= n+1")
    _cap("johnson", math.comb(n + 1, k), limits)
    pts = []
    for ones in itertools.combinations(range(n + 1), k):
        pts.append(tuple(1 if i in ones else 0 for i in range(n + 1)))
    return PointSet(n + 1, tuple(pts))


def triangle_fixture() -> PointSet:
    """Equilateral lattice triangle, all sides of squared length 2."""
    return PointSet(3, ((0, 0, 0), (1, 1, 0), (1, 0, 1)))


# ----------------------------------------------------------------------
# Class-matrix fixtures


def regular_polygon_matrix(m: int) -> DistanceClassMatrix:
    """Regular ``m``-gon; class of a pair is its circular index gap ``min(d, m-d)``."""
    if m < 3:
        raise InputError("regular_polygon_matrix(m) needs m >= 3")
    idx = np.arange(m)
    gap = np.abs(idx[:, None] - idx[None, :])
    classes = np.minimum(gap, m - gap)
    return DistanceClassMatrix(
        classes,
        None,
        provenance=f"regular_polygon_matrix({m}): class = circular index gap; "
        f"float64 cross-check tolerance {CROSS_CHECK_TOLERANCE:g}",
    )


# Elements of Z[phi] as (a, b) meaning a + b*phi, with phi^2 = phi + 1.
_GoldenInt = Tuple[int, int]


def _g_sub(x: _GoldenInt, y: _GoldenInt) -> _GoldenInt:
    return (x[0] - y[0], x[1] - y[1])


def _g_mul(x: _GoldenInt, y: _GoldenInt) -> _GoldenInt:
    a, b = x
    c, d = y
    return (a * c + b * d, a * d + b * c + b * d)


def _icosahedron_vertices() -> List[Tuple[_GoldenInt, _GoldenInt, _GoldenInt]]:
    """Cyclic permutations of ``(0, +-1, +-phi)``."""
    verts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            base = ((0, 0), (s1, 0), (0, s2))
            for shift in range(3):
                verts.append(tuple(base[(i - shift) % 3] for i in range(3)))
    return verts  # type: ignore[return-value]


def _icosahedron_float() -> np.ndarray:
    rows = []
    for v in _icosahedron_vertices():
        rows.append([a + b * _PHI for a, b in v])
    return np.array(rows, dtype=np.float64)


def icosahedron_matrix() -> DistanceClassMatrix:
    """Icosahedron: 12 vertices, classes edge / non-adjacent / antipodal."""
    verts = _icosahedron_vertices()
    n = len(verts)
    exact: Dict[Tuple[int, int], _GoldenInt] = {}
    for i in range(n):
        for j in range(i + 1, n):
            total = (0, 0)
            for x, y in zip(verts[i], verts[j]):
                d = _g_sub(x, y)
                sq = _g_mul(d, d)
                total = (total[0] + sq[0], total[1] + sq[1])
            exact[(i, j)] = total
    # distinct exact values are far apart, so float ranking is safe
    ordered = sorted(set(exact.values()), key=lambda g: g[0] + g[1] * _PHI)
    ids = {value: k + 1 for k, value in enumerate(ordered)}
    arr = np.zeros((n, n), dtype=np.int64)
    for (i, j), value in exact.items():
        arr[i, j] = arr[j, i] = ids[value]
    return DistanceClassMatrix(
        arr,
        None,
        provenance="icosahedron_matrix: vertices (0, +-1, +-phi) cyclic, exact in Z[phi]; "
        f"float64 cross-check tolerance {CROSS_CHECK_TOLERANCE:g}",
    )


# ----------------------------------------------------------------------
# Numeric cross-check


@dataclass(frozen=True)
class NumericCrossCheck:
    name: str
    agrees: bool
    class_count: int
    min_gap: float

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "agrees": self.agrees,
            "class_count": self.class_count,
            "min_gap": self.min_gap,
            "tolerance": CROSS_CHECK_TOLERANCE,
        }


def _float_classes(coords: np.ndarray) -> Tuple[np.ndarray, float]:
    diff = coords[:, None, :] - coords[None, :, :]
    d2 = np.einsum("ijk,ijk->ij", diff, diff)
    n = coords.shape[0]
    iu = np.triu_indices(n, k=1)
    values = np.sort(d2[iu])
    reps: List[float] = []
    for v in values:
        if not reps or v - reps[-1] > CROSS_CHECK_TOLERANCE * max(1.0, abs(v)):
            reps.append(float(v))
    gaps = np.diff(reps)
    classes = np.zeros((n, n), dtype=np.int64)
    for i, j in zip(*iu):
        cid = int(np.argmin([abs(d2[i, j] - r) for r in reps])) + 1
        classes[i, j] = classes[j, i] = cid
    return classes, float(gaps.min()) if gaps.size else math.inf


def numeric_cross_check(name: str) -> NumericCrossCheck:
    """Re-derive an irrational fixture's class layout from float64 coordinates."""

    base, args = parse_fixture_name(name)
    if base == "regular_polygon_matrix":
        _arity(base, args, 1)
        matrix = regular_polygon_matrix(args[0])
        angles = 2 * math.pi * np.arange(args[0]) / args[0]
        coords = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    elif base == "icosahedron_matrix":
        _arity(base, args, 0)
        matrix = icosahedron_matrix()
        coords = _icosahedron_float()
    else:
        raise UnknownFixtureError(f"{name!r} has exact coordinates; no numeric cross-check")
    classes, gap = _float_classes(coords)
    agrees = bool(np.array_equal(classes, matrix.classes))
    return NumericCrossCheck(name, agrees, matrix.class_count, gap)


def fixture(name: str, limits: Optional[Limits] = None) -> Space:
    """Build the named configuration (see :data:`FIXTURE_NAMES`)."""

    base, args = parse_fixture_name(name)
    if base == "line":
        _arity(base, args, 1)
        return line_fixture(args[0])
    if base == "square":
        _arity(base, args, 0)
        return square_fixture()
    if base == "hypercube":
        _arity(base, args, 1)
        return hypercube_fixture(args[0], limits)
    if base == "johnson":
        _arity(base, args, 2)
        return johnson_fixture(args[0], args[1], limits)
    if base == "triangle_Z3":
        _arity(base, args, 0)
        return triangle_fixture()
    if base in ("regular_polygon_matrix", "icosahedron_matrix"):
        check = numeric_cross_check(name)
        if not check.agrees:
            raise CertificateError(f"{name}: combinatorial classes disagree with float64 coordinates")
        if base == "icosahedron_matrix":
            return icosahedron_matrix()
        return regular_polygon_matrix(args[0])
    raise UnknownFixtureError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


__all__ = [
    "FIXTURE_NAMES",
    "CROSS_CHECK_TOLERANCE",
    "NumericCrossCheck",
    "parse_fixture_name",
    "fixture",
    "numeric_cross_check",
    "line_fixture",
    "square_fixture",
    "hypercube_fixture",
    "johnson_fixture",
    "triangle_fixture",
    "regular_polygon_matrix",
    "icosahedron_matrix",
]
