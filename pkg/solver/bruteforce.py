"""Exhaustive chromatic number, used as a testing oracle."""
from __future__ import annotations

from config import BRUTE_FORCE_MAX_VERTICES
from errors import SizeCapError
from graphs.graph import DistanceGraph


def _colorable(g: DistanceGraph, colors: int) -> bool:
    n = g.vertex_count
    assignment = [-1] * n
    assignment[0] = 0  # only symmetry reduction: vertex 0 takes color 0

    def extend(v: int) -> bool:
        if v == n:
            return True
        row = g.rows[v]
        for c in range(colors):
            if any(assignment[u] == c for u in range(v) if (row >> u) & 1):
                continue
            assignment[v] = c
            if extend(v + 1):
                return True
        assignment[v] = -1
        return False

    return extend(1)


def chromatic_bruteforce(g: DistanceGraph) -> int:
    """Smallest ``c`` admitting a valid assignment, trying ``c = 1, 2, ...``."""

    n = g.vertex_count
    if n > BRUTE_FORCE_MAX_VERTICES:
        raise SizeCapError("chromatic_bruteforce", n, BRUTE_FORCE_MAX_VERTICES)
    if n == 0:
        return 0
    for colors in range(1, n + 1):
        if _colorable(g, colors):
            return colors
    return n


__all__ = ["chromatic_bruteforce"]
