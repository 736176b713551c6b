"""Exact chromatic number by DSATUR-ordered branch and bound.

Vertex choice everywhere: highest saturation, then highest degree, then
lowest index. The greedy clique found first is precolored with colors
``0..q-1`` (first vertex gets color 0) and new colors are only ever opened in
index order, which removes color-permutation symmetry.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

from config import Limits
from data_logger import log_event
from errors import BudgetExhausted, SizeCapError
from graphs.graph import DistanceGraph
from .coloring import ChromaticResult, Coloring
from .greedy import degeneracy_order, greedy_clique, greedy_coloring


class _DsaturState:
    """Mutable partial coloring with saturation masks and undo support."""

    def __init__(self, g: DistanceGraph) -> None:
        self.n = g.vertex_count
        self.rows = g.rows
        self.degree = [g.degree(v) for v in range(self.n)]
        self.color = [-1] * self.n
        self.sat = [0] * self.n
        self.uncolored = (1 << self.n) - 1
        self.used = 0

    def assign(self, v: int, c: int) -> Tuple[List[int], int]:
        self.color[v] = c
        self.uncolored &= ~(1 << v)
        bit = 1 << c
        changed: List[int] = []
        mask = self.rows[v] & self.uncolored
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            if not self.sat[u] & bit:
                self.sat[u] |= bit
                changed.append(u)
            mask ^= low
        prev_used = self.used
        if c >= self.used:
            self.used = c + 1
        return changed, prev_used

    def unassign(self, v: int, c: int, changed: List[int], prev_used: int) -> None:
        self.color[v] = -1
        self.uncolored |= 1 << v
        bit = ~(1 << c)
        for u in changed:
            self.sat[u] &= bit
        self.used = prev_used

    def select(self) -> int:
        best_v = -1
        best_key = (-1, -1)
        mask = self.uncolored
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            key = (self.sat[v].bit_count(), self.degree[v])
            if key > best_key:
                best_v, best_key = v, key
            mask ^= low
        return best_v

    def lowest_free(self, v: int) -> int:
        s = self.sat[v]
        return (~s & (s + 1)).bit_length() - 1


def dsatur_coloring(g: DistanceGraph) -> Coloring:
    """Heuristic DSATUR: always the least free color, no backtracking."""

    state = _DsaturState(g)
    for _ in range(g.vertex_count):
        v = state.select()
        state.assign(v, state.lowest_free(v))
    return Coloring.from_sequence(state.color)


class _BranchAndBound:
    def __init__(
        self,
        g: DistanceGraph,
        clique: Tuple[int, ...],
        upper: Coloring,
        budget: Optional[int],
        nodes: int,
    ) -> None:
        self.state = _DsaturState(g)
        self.clique = clique
        self.lower = len(clique)
        self.best = upper.color_count
        self.best_assignment = list(upper.assignment)
        self.budget = budget
        self.nodes = nodes

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(
                "chromatic_exact",
                self.nodes,
                {"lower": self.lower, "upper": self.best},
            )

    def _record(self) -> None:
        if self.state.used < self.best:
            self.best = self.state.used
            self.best_assignment = list(self.state.color)

    def _candidates(self, v: int) -> List[int]:
        s = self.state
        limit = min(s.used + 1, self.best - 1)
        return [c for c in range(limit) if not (s.sat[v] >> c) & 1]

    def run(self) -> None:
        s = self.state
        for c, v in enumerate(self.clique):
            s.assign(v, c)
            self._tick()
        first = s.select()
        if first < 0:
            self._record()
            return
        # frame: [vertex, candidate colors, next position, undo record]
        stack: List[list] = [[first, self._candidates(first), 0, None]]
        while stack:
            frame = stack[-1]
            v = frame[0]
            if frame[3] is not None:
                c, changed, prev_used = frame[3]
                s.unassign(v, c, changed, prev_used)
                frame[3] = None
            if self.best <= self.lower:
                return
            if s.used >= self.best or frame[2] >= len(frame[1]):
                stack.pop()
                continue
            c = frame[1][frame[2]]
            frame[2] += 1
            if c >= self.best - 1:
                stack.pop()
                continue
            changed, prev_used = s.assign(v, c)
            frame[3] = (c, changed, prev_used)
            self._tick()
            nxt = s.select()
            if nxt < 0:
                self._record()
                continue
            cands = self._candidates(nxt)
            if cands:
                stack.append([nxt, cands, 0, None])


def chromatic_exact(
    g: DistanceGraph,
    budget: Optional[int] = None,
    limits: Optional[Limits] = None,
) -> ChromaticResult:
    """Exact chromatic number of ``g``.

    ``budget`` bounds the number of vertex assignments (heuristic pass
    included). On exhaustion :class:`BudgetExhausted` is raised; a partial
    answer is never returned.
    """

    n = g.vertex_count
    cap = (limits or Limits.from_env()).max_graph_vertices
    if n > cap:
        raise SizeCapError("chromatic_exact", n, cap)
    if n == 0:
        return ChromaticResult(0, Coloring((), 0), (), "clique", 0, 0)

    clique = greedy_clique(g)
    nodes = n
    if budget is not None and nodes > budget:
        log_event({"event": "budget_exhausted", "what": "chromatic_exact", "nodes": nodes, "vertices": n})
        raise BudgetExhausted("chromatic_exact", nodes, {"lower": len(clique)})

    upper = dsatur_coloring(g)
    alt = greedy_coloring(g, degeneracy_order(g))
    if alt.color_count < upper.color_count:
        upper = alt
    heuristic = upper.color_count

    search = _BranchAndBound(g, clique, upper, budget, nodes)
    if search.best > search.lower:
        try:
            search.run()
        except BudgetExhausted as exc:
            log_event({
                "event": "budget_exhausted",
                "what": "chromatic_exact",
                "nodes": exc.nodes_explored,
                "vertices": n,
                **exc.bounds,
            })
            raise

    chi = search.best
    coloring = Coloring.from_sequence(search.best_assignment)
    certificate = "clique" if chi == len(clique) else "search"
    return ChromaticResult(chi, coloring, clique, certificate, search.nodes, heuristic)


__all__ = ["dsatur_coloring", "chromatic_exact"]
