"""Largest subsets realizing at most ``k`` distance classes."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from config import KDISTANCE_BRUTE_FORCE_MAX_POINTS, Limits
from errors import InputError, SizeCapError
from graphs.classes import DistanceClassMatrix


@dataclass(frozen=True)
class KDistanceSetResult:
    k: int
    subset: Tuple[int, ...]
    class_count: int
    classes: Tuple[int, ...]
    optimal: bool
    nodes_explored: int = 0

    @property
    def size(self) -> int:
        return len(self.subset)

    def verify(self, m: DistanceClassMatrix) -> bool:
        found = tuple(m.classes_within(self.subset))
        return found == self.classes and len(found) == self.class_count <= self.k

    def to_json(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "subset": list(self.subset),
            "size": self.size,
            "class_count": self.class_count,
            "classes": list(self.classes),
            "optimal": self.optimal,
            "nodes_explored": self.nodes_explored,
        }


def _result(m: DistanceClassMatrix, k: int, subset, optimal: bool, nodes: int) -> KDistanceSetResult:
    subset = tuple(sorted(subset))
    classes = tuple(m.classes_within(subset))
    return KDistanceSetResult(k, subset, len(classes), classes, optimal, nodes)


class _Stop(Exception):
    pass


class _KDistanceSearch:
    """Depth-first inclusion search.

    Each candidate carries the class mask it would add to the current subset;
    candidates are tried fewest-new-classes first, ties by index, and every
    later sibling excludes the earlier ones.
    """

    def __init__(self, m: DistanceClassMatrix, k: int, budget: Optional[int]) -> None:
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.table: List[List[int]] = m.classes.tolist()
        self.best: List[int] = self._greedy(m.size)

    def _greedy(self, n: int) -> List[int]:
        chosen: List[int] = []
        mask = 0
        for u in range(n):
            add = 0
            for v in chosen:
                add |= 1 << self.table[u][v]
            if (mask | add).bit_count() <= self.k:
                chosen.append(u)
                mask |= add
        return chosen

    def expand(self, chosen: List[int], mask: int, cands: List[Tuple[int, int]]) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _Stop()
        if len(chosen) > len(self.best):
            self.best = list(chosen)
        if len(chosen) + len(cands) <= len(self.best):
            return
        ordered = sorted(cands, key=lambda c: ((c[1] & ~mask).bit_count(), c[0]))
        total = len(ordered)
        for i, (u, du) in enumerate(ordered):
            if len(chosen) + total - i <= len(self.best):
                return
            grown = mask | du
            row = self.table[u]
            nxt: List[Tuple[int, int]] = []
            for w, dw in ordered[i + 1:]:
                dw |= 1 << row[w]
                if (grown | dw).bit_count() <= self.k:
                    nxt.append((w, dw))
            chosen.append(u)
            self.expand(chosen, grown, nxt)
            chosen.pop()


def max_k_distance_set(
    m: DistanceClassMatrix,
    k: int,
    budget: Optional[int] = None,
    limits: Optional[Limits] = None,
) -> KDistanceSetResult:
    """Exact maximum k-distance subset of ``m``.

    Budget exhaustion returns the best subset found with ``optimal=False``.
    """

    if k < 1:
        raise InputError("k must be >= 1")
    n = m.size
    cap = (limits or Limits.from_env()).max_search_vertices
    if n > cap:
        raise SizeCapError("max_k_distance_set", n, cap)
    if k >= m.class_count:
        return _result(m, k, range(n), True, 0)

    search = _KDistanceSearch(m, k, budget)
    try:
        search.expand([], 0, [(u, 0) for u in range(n)])
    except _Stop:
        return _result(m, k, search.best, False, search.nodes)
    return _result(m, k, search.best, True, search.nodes)


def kdistance_bruteforce(m: DistanceClassMatrix, k: int) -> KDistanceSetResult:
    """Oracle: largest subset by exhaustive enumeration, lexicographically first."""

    if k < 1:
        raise InputError("k must be >= 1")
    n = m.size
    if n > KDISTANCE_BRUTE_FORCE_MAX_POINTS:
        raise SizeCapError("kdistance_bruteforce", n, KDISTANCE_BRUTE_FORCE_MAX_POINTS)
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            if len(m.classes_within(subset)) <= k:
                return _result(m, k, subset, True, 0)
    return _result(m, k, (), True, 0)


__all__ = ["KDistanceSetResult", "max_k_distance_set", "kdistance_bruteforce"]
