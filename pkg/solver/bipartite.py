"""Two-coloring by breadth-first search with odd-cycle certificates."""
from __future__ import annotations

from collections import deque
from typing import Dict, List, Tuple

from graphs.graph import DistanceGraph
from .coloring import BipartitionResult


def _path_to_root(v: int, parent: Dict[int, int]) -> List[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def _odd_cycle(u: int, w: int, parent: Dict[int, int]) -> Tuple[int, ...]:
    """Cycle closed by the same-side edge ``(u, w)`` through the BFS tree."""

    pu = _path_to_root(u, parent)
    pw = _path_to_root(w, parent)
    on_pu = {v: i for i, v in enumerate(pu)}
    for j, v in enumerate(pw):
        if v in on_pu:
            i = on_pu[v]
            # u .. lca, then back down to w (lca counted once)
            return tuple(pu[: i + 1] + list(reversed(pw[:j])))
    raise AssertionError("BFS tree vertices share a root")


def bipartition(g: DistanceGraph) -> BipartitionResult:
    """Sides of a proper 2-coloring, or an odd cycle proving there is none.

    Components are explored from their lowest-index vertex, which takes
    side 0.
    """

    n = g.vertex_count
    side = [-1] * n
    parent: Dict[int, int] = {}
    for root in range(n):
        if side[root] != -1:
            continue
        side[root] = 0
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return BipartitionResult(odd_cycle=_odd_cycle(u, w, parent), vertex_count=n)
    left = tuple(v for v in range(n) if side[v] == 0)
    right = tuple(v for v in range(n) if side[v] == 1)
    return BipartitionResult(sides=(left, right), vertex_count=n)


__all__ = ["bipartition"]
