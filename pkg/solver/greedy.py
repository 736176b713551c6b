"""Ordered greedy coloring, smallest-last ordering and greedy cliques."""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from errors import InputError
from graphs.graph import DistanceGraph
from .coloring import Coloring

GREEDY_CLIQUE_STARTS = 32


def _lowest_free(used: int) -> int:
    return (~used & (used + 1)).bit_length() - 1


def greedy_coloring(g: DistanceGraph, order: Optional[Sequence[int]] = None) -> Coloring:
    """Color vertices in ``order`` with the least color unused by colored neighbors.

    ``order`` defaults to increasing vertex index.
    """

    n = g.vertex_count
    seq = list(range(n)) if order is None else [int(v) for v in order]
    if sorted(seq) != list(range(n)):
        raise InputError("order must be a permutation of the vertices")
    taken = [0] * n  # bitmask of colors present among colored neighbors
    assignment = [-1] * n
    for v in seq:
        c = _lowest_free(taken[v])
        assignment[v] = c
        bit = 1 << c
        row = g.rows[v]
        while row:
            low = row & -row
            taken[low.bit_length() - 1] |= bit
            row ^= low
    return Coloring.from_sequence(assignment)


def degeneracy_order(g: DistanceGraph) -> List[int]:
    """Smallest-last order: repeatedly strip a minimum-degree vertex.

    Ties go to the lowest index; the returned order is the reverse of the
    stripping sequence, so each vertex has at most ``degeneracy`` earlier
    neighbors.
    """

    n = g.vertex_count
    remaining = (1 << n) - 1
    removed: List[int] = []
    for _ in range(n):
        best_v, best_d = -1, n + 1
        mask = remaining
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            d = (g.rows[v] & remaining).bit_count()
            if d < best_d:
                best_v, best_d = v, d
                if d == 0:
                    break
            mask ^= low
        removed.append(best_v)
        remaining &= ~(1 << best_v)
    removed.reverse()
    return removed


def degeneracy(g: DistanceGraph) -> int:
    """Largest number of earlier neighbors along :func:`degeneracy_order`."""

    order = degeneracy_order(g)
    seen = 0
    worst = 0
    for v in order:
        worst = max(worst, (g.rows[v] & seen).bit_count())
        seen |= 1 << v
    return worst


def greedy_clique(g: DistanceGraph, starts: int = GREEDY_CLIQUE_STARTS) -> Tuple[int, ...]:
    """Greedy clique from the highest-degree starting vertices.

    Each step adds the candidate with most neighbors among the remaining
    candidates (ties: lowest index). Deterministic.
    """

    n = g.vertex_count
    if n == 0:
        return ()
    ranked = sorted(range(n), key=lambda v: (-g.degree(v), v))[: max(1, starts)]
    best: Tuple[int, ...] = ()
    for s in ranked:
        clique = [s]
        cand = g.rows[s]
        while cand:
            pick, pick_score = -1, -1
            mask = cand
            while mask:
                low = mask & -mask
                v = low.bit_length() - 1
                score = (g.rows[v] & cand).bit_count()
                if score > pick_score:
                    pick, pick_score = v, score
                mask ^= low
            clique.append(pick)
            cand &= g.rows[pick]
        if len(clique) > len(best):
            best = tuple(sorted(clique))
    return best


__all__ = ["greedy_coloring", "degeneracy_order", "degeneracy", "greedy_clique"]
