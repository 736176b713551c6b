"""Maximum clique by branch and bound with a greedy-coloring bound."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from config import Limits
from errors import SizeCapError
from graphs.graph import DistanceGraph
from solver.greedy import greedy_clique


@dataclass(frozen=True)
class CliqueResult:
    vertices: Tuple[int, ...]
    optimal: bool
    nodes_explored: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    def verify(self, g: DistanceGraph) -> bool:
        return g.is_clique(self.vertices)

    def to_json(self) -> Dict[str, Any]:
        return {
            "clique": list(self.vertices),
            "size": self.size,
            "optimal": self.optimal,
            "nodes_explored": self.nodes_explored,
        }


class _Stop(Exception):
    pass


class _CliqueSearch:
    def __init__(self, g: DistanceGraph, budget: Optional[int]) -> None:
        self.rows = g.rows
        self.budget = budget
        self.nodes = 0
        self.best: Tuple[int, ...] = greedy_clique(g)

    def _color_sort(self, cand: int) -> List[Tuple[int, int]]:
        """Vertices of ``cand`` with greedy color numbers, ascending by color."""
        order: List[Tuple[int, int]] = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, color))
                rest ^= low
                avail &= ~self.rows[v] & ~low
        return order

    def expand(self, chosen: List[int], cand: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _Stop()
        order = self._color_sort(cand)
        for v, color in reversed(order):
            if len(chosen) + color <= len(self.best):
                return
            chosen.append(v)
            nxt = cand & self.rows[v]
            if nxt:
                self.expand(chosen, nxt)
            elif len(chosen) > len(self.best):
                self.best = tuple(sorted(chosen))
            chosen.pop()
            cand &= ~(1 << v)


def max_clique(
    g: DistanceGraph,
    budget: Optional[int] = None,
    limits: Optional[Limits] = None,
) -> CliqueResult:
    """Maximum clique of ``g``.

    On budget exhaustion the best clique found so far is returned with
    ``optimal=False``.
    """

    n = g.vertex_count
    cap = (limits or Limits.from_env()).max_search_vertices
    if n > cap:
        raise SizeCapError("max_clique", n, cap)
    if n == 0:
        return CliqueResult((), True, 0)
    search = _CliqueSearch(g, budget)
    try:
        search.expand([], (1 << n) - 1)
    except _Stop:
        return CliqueResult(search.best, False, search.nodes)
    return CliqueResult(search.best, True, search.nodes)


__all__ = ["CliqueResult", "max_clique"]
