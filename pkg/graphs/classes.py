"""Classification of point pairs by exact squared distance."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from config import Limits
from errors import InputError, SizeCapError, UnknownClassError
from numerics.points import PointSet

SELF_CLASS = 0


@dataclass(frozen=True, eq=False)
class DistanceClassMatrix:
    """Symmetric matrix of squared-distance class IDs.

    IDs run from 1 in increasing order of squared distance; the diagonal holds
    :data:`SELF_CLASS`. ``class_table`` maps IDs to squared distances and is
    ``None`` for matrices supplied without coordinates.
    """

    classes: np.ndarray
    class_table: Optional[Dict[int, Fraction]] = None
    provenance: str = ""
    _ids: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        arr = np.array(self.classes, dtype=np.int64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InputError("class matrix must be square")
        if not np.array_equal(arr, arr.T):
            raise InputError("class matrix must be symmetric")
        if np.any(np.diag(arr) != SELF_CLASS):
            raise InputError("class matrix diagonal must hold the self sentinel 0")
        off = arr[~np.eye(arr.shape[0], dtype=bool)]
        if off.size and off.min() < 1:
            raise InputError("off-diagonal class IDs must be positive")
        arr.setflags(write=False)
        object.__setattr__(self, "classes", arr)
        ids = tuple(sorted(int(c) for c in np.unique(off)))
        object.__setattr__(self, "_ids", ids)
        if self.class_table is not None:
            table = {int(k): Fraction(v) for k, v in self.class_table.items()}
            missing = [c for c in ids if c not in table]
            if missing:
                raise InputError(f"class_table lacks entries for classes {missing}")
            ordered = [table[c] for c in ids]
            if any(d <= 0 for d in ordered) or len(set(ordered)) != len(ordered):
                raise InputError("class_table must map classes to distinct positive squared distances")
            if ordered != sorted(ordered):
                raise InputError("class IDs must increase with squared distance")
            object.__setattr__(self, "class_table", table)

    # ------------------------------------------------------------------
    @property
    def size(self) -> int:
        return int(self.classes.shape[0])

    def class_ids(self) -> List[int]:
        """Class IDs realized between distinct points, ascending."""
        return list(self._ids)

    @property
    def class_count(self) -> int:
        return len(self._ids)

    def class_of(self, i: int, j: int) -> int:
        return int(self.classes[i, j])

    def squared_distance_of(self, class_id: int) -> Optional[Fraction]:
        if self.class_table is None:
            return None
        return self.class_table.get(class_id)

    def id_for(self, squared: Fraction) -> Optional[int]:
        """Class ID realizing ``squared``, or ``None`` when unrealized."""
        if self.class_table is None:
            raise InputError("matrix has no class_table; forbid by class ID instead")
        for cid, value in self.class_table.items():
            if value == squared and cid in self._ids:
                return cid
        return None

    def check_classes(self, ids: Iterable[int]) -> None:
        unknown = sorted(set(int(c) for c in ids) - set(self._ids))
        if unknown:
            raise UnknownClassError(f"unknown class IDs {unknown}; realized: {list(self._ids)}")

    def class_frequencies(self) -> Dict[int, int]:
        """Number of unordered pairs in each class."""
        upper = self.classes[np.triu_indices(self.size, k=1)]
        values, counts = np.unique(upper, return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}

    def classes_within(self, subset: Iterable[int]) -> List[int]:
        idx = list(subset)
        if len(idx) < 2:
            return []
        block = self.classes[np.ix_(idx, idx)]
        return sorted(int(c) for c in np.unique(block) if c != SELF_CLASS)

    def submatrix(self, indices: Iterable[int]) -> "DistanceClassMatrix":
        """Induced configuration; class IDs keep their meaning."""
        idx = list(indices)
        block = self.classes[np.ix_(idx, idx)]
        table = None
        if self.class_table is not None:
            present = set(int(c) for c in np.unique(block)) - {SELF_CLASS}
            table = {c: d for c, d in self.class_table.items() if c in present}
        return DistanceClassMatrix(block, table, provenance=self.provenance)


def classify(ps: PointSet, limits: Optional[Limits] = None) -> DistanceClassMatrix:
    """Partition all pairs of ``ps`` by exact squared distance."""

    n = len(ps)
    if n < 1:
        raise InputError("cannot classify an empty point set")
    cap = (limits or Limits.from_env()).max_graph_vertices
    if n > cap:
        raise SizeCapError("classify", n, cap)

    # Work over the common denominator so the inner loop is integer only.
    scale = 1
    for p in ps.points:
        for c in p:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
    ints = [[int(c * scale) for c in p] for p in ps.points]

    raw: Dict[Tuple[int, int], int] = {}
    distinct = set()
    for i in range(n):
        pi = ints[i]
        for j in range(i + 1, n):
            d2 = 0
            for a, b in zip(pi, ints[j]):
                d2 += (a - b) * (a - b)
            raw[(i, j)] = d2
            distinct.add(d2)

    ordered = sorted(distinct)
    ids = {d2: k + 1 for k, d2 in enumerate(ordered)}
    arr = np.zeros((n, n), dtype=np.int64)
    for (i, j), d2 in raw.items():
        arr[i, j] = arr[j, i] = ids[d2]
    denom = scale * scale
    table = {ids[d2]: Fraction(d2, denom) for d2 in ordered}
    return DistanceClassMatrix(arr, table, provenance=f"classify({n} points, dim {ps.dimension})")


__all__ = ["SELF_CLASS", "DistanceClassMatrix", "classify"]
