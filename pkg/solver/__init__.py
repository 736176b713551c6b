"""Chromatic number engine: exact, heuristic, bipartite and brute force."""
from __future__ import annotations

from .bipartite import bipartition
from .bruteforce import chromatic_bruteforce
from .coloring import BipartitionResult, ChromaticResult, Coloring
from .dsatur import chromatic_exact, dsatur_coloring
from .greedy import degeneracy, degeneracy_order, greedy_clique, greedy_coloring

__all__ = [
    "Coloring",
    "ChromaticResult",
    "BipartitionResult",
    "chromatic_exact",
    "chromatic_bruteforce",
    "dsatur_coloring",
    "greedy_coloring",
    "degeneracy_order",
    "degeneracy",
    "greedy_clique",
    "bipartition",
]
