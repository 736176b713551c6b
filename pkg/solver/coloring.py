"""Colorings and the result records produced by the solvers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from errors import InputError
from graphs.graph import DistanceGraph


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color index in ``range(color_count)``.

    ``color_count`` may exceed the number of colors actually used (a product
    of colorings keeps the full product palette).
    """

    assignment: Tuple[int, ...]
    color_count: int

    def __post_init__(self) -> None:
        values = tuple(int(c) for c in self.assignment)
        object.__setattr__(self, "assignment", values)
        if any(c < 0 for c in values):
            raise InputError("color indices must be non-negative")
        if values and max(values) >= self.color_count:
            raise InputError("color index outside the palette")
        if self.color_count < 0:
            raise InputError("color_count must be non-negative")

    @classmethod
    def from_sequence(cls, assignment: Sequence[int]) -> "Coloring":
        values = tuple(int(c) for c in assignment)
        return cls(values, (max(values) + 1) if values else 0)

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def used_colors(self) -> int:
        return len(set(self.assignment))

    def conflicts(self, g: DistanceGraph) -> List[Tuple[int, int]]:
        if len(self.assignment) != g.vertex_count:
            raise InputError("coloring and graph have different vertex counts")
        return [(u, v) for u, v in g.edges() if self.assignment[u] == self.assignment[v]]

    def is_valid(self, g: DistanceGraph) -> bool:
        """No edge of ``g`` joins two vertices of the same color."""
        if len(self.assignment) != g.vertex_count:
            return False
        masks: Dict[int, int] = {}
        for v, c in enumerate(self.assignment):
            masks[c] = masks.get(c, 0) | (1 << v)
        return all(not (row & masks[self.assignment[u]]) for u, row in enumerate(g.rows))

    def canonical(self) -> "Coloring":
        """Relabel colors in order of first appearance."""
        relabel: Dict[int, int] = {}
        values = []
        for c in self.assignment:
            if c not in relabel:
                relabel[c] = len(relabel)
            values.append(relabel[c])
        return Coloring(tuple(values), len(relabel))

    def to_json(self) -> Dict[str, Any]:
        return {"color_count": self.color_count, "assignment": list(self.assignment)}


@dataclass(frozen=True)
class ChromaticResult:
    """Exact chromatic number with its witnesses.

    ``certificate`` is ``"clique"`` when ``clique`` alone proves optimality
    (``len(clique) == chi``) and ``"search"`` when the exhaustive search did.
    ``clique`` is always a valid lower-bound clique.
    """

    chi: int
    coloring: Coloring
    clique: Tuple[int, ...]
    certificate: str
    nodes_explored: int = 0
    upper_heuristic: int = 0

    def verify(self, g: DistanceGraph) -> bool:
        return (
            self.coloring.is_valid(g)
            and self.coloring.used_colors() == self.chi
            and g.is_clique(self.clique)
            and len(self.clique) <= self.chi
            and (self.certificate != "clique" or len(self.clique) == self.chi)
        )

    def to_json(self) -> Dict[str, Any]:
        cert: Dict[str, Any] = {"type": self.certificate}
        if self.certificate == "clique":
            cert["clique"] = list(self.clique)
        else:
            cert["lower_bound_clique"] = list(self.clique)
        return {
            "chi": self.chi,
            "coloring": list(self.coloring.assignment),
            "certificate": cert,
            "nodes_explored": self.nodes_explored,
        }


@dataclass(frozen=True)
class BipartitionResult:
    """Either two color classes or an odd cycle, never both."""

    sides: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
    odd_cycle: Optional[Tuple[int, ...]] = None
    vertex_count: int = field(default=0)

    def __post_init__(self) -> None:
        if (self.sides is None) == (self.odd_cycle is None):
            raise InputError("exactly one of sides / odd_cycle must be present")

    @property
    def is_bipartite(self) -> bool:
        return self.sides is not None

    def to_coloring(self) -> Coloring:
        if self.sides is None:
            raise InputError("graph is not bipartite")
        assignment = [0] * self.vertex_count
        for v in self.sides[1]:
            assignment[v] = 1
        return Coloring(tuple(assignment), 2 if self.vertex_count else 0)

    def verify(self, g: DistanceGraph) -> bool:
        if self.sides is not None:
            left, right = self.sides
            if sorted(left + right) != list(range(g.vertex_count)):
                return False
            return self.to_coloring().is_valid(g)
        cycle = self.odd_cycle or ()
        if len(cycle) < 3 or len(cycle) % 2 == 0 or len(set(cycle)) != len(cycle):
            return False
        return all(g.adjacent(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))

    def to_json(self) -> Dict[str, Any]:
        if self.sides is not None:
            return {"bipartite": True, "sides": [list(self.sides[0]), list(self.sides[1])]}
        return {"bipartite": False, "odd_cycle": list(self.odd_cycle or ())}


__all__ = ["Coloring", "ChromaticResult", "BipartitionResult"]
