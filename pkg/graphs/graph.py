"""Distance graphs: vertices joined exactly at forbidden distance classes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from errors import InputError
from .classes import DistanceClassMatrix


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class DistanceGraph:
    """Simple undirected graph stored as one adjacency bitset per vertex.

    ``forbidden_distances`` lists the requested squared distances that are
    realized, ``unrealized`` the requested ones no pair attains.
    """

    vertex_count: int
    rows: Tuple[int, ...]
    forbidden_classes: FrozenSet[int] = frozenset()
    forbidden_distances: Tuple[Fraction, ...] = ()
    unrealized: Tuple[Fraction, ...] = ()
    source: str = ""

    def __post_init__(self) -> None:
        if len(self.rows) != self.vertex_count:
            raise InputError("adjacency rows do not match vertex count")
        limit = 1 << self.vertex_count
        for v, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise InputError(f"row {v} references vertices out of range")
            if (row >> v) & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not (self.rows[u] >> v) & 1:
                    raise InputError(f"adjacency is not symmetric at ({v}, {u})")

    # ------------------------------------------------------------------
    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[Tuple[int, int]],
        source: str = "",
    ) -> "DistanceGraph":
        rows = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(vertex_count, tuple(rows), source=source)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in _bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edge_set(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(self.edges())

    def is_clique(self, vertices: Sequence[int]) -> bool:
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            return False
        return all(self.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def induced(self, indices: Sequence[int]) -> "DistanceGraph":
        """Subgraph induced by ``indices``, renumbered in the given order."""
        idx = list(indices)
        pos = {v: i for i, v in enumerate(idx)}
        rows = []
        for v in idx:
            row = 0
            for u in _bits(self.rows[v]):
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        return DistanceGraph(
            len(idx),
            tuple(rows),
            self.forbidden_classes,
            self.forbidden_distances,
            self.unrealized,
            source=f"induced({self.source})",
        )

    def union(self, other: "DistanceGraph") -> "DistanceGraph":
        """Edge union of two graphs on the same vertex set."""
        if other.vertex_count != self.vertex_count:
            raise InputError("graphs live on different vertex sets")
        rows = tuple(a | b for a, b in zip(self.rows, other.rows))
        distances = tuple(sorted(set(self.forbidden_distances) | set(other.forbidden_distances)))
        missing = tuple(sorted(set(self.unrealized) | set(other.unrealized)))
        return DistanceGraph(
            self.vertex_count,
            rows,
            self.forbidden_classes | other.forbidden_classes,
            distances,
            missing,
            source=f"union({self.source}, {other.source})",
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    def same_adjacency(self, other: "DistanceGraph") -> bool:
        return self.vertex_count == other.vertex_count and self.rows == other.rows


def build_graph(
    matrix: DistanceClassMatrix,
    classes: Optional[Iterable[int]] = None,
    distances: Optional[Iterable[Fraction]] = None,
) -> DistanceGraph:
    """Graph joining the pairs whose class is forbidden.

    ``classes`` are class IDs (unknown IDs are an error); ``distances`` are
    squared distances resolved against the class table, unrealized ones add
    no edges and are reported on the graph.
    """

    forbidden = set()
    if classes is not None:
        ids = [int(c) for c in classes]
        matrix.check_classes(ids)
        forbidden.update(ids)

    realized: List[Fraction] = []
    unrealized: List[Fraction] = []
    if distances is not None:
        for d in distances:
            d = Fraction(d)
            if d <= 0:
                raise InputError(f"forbidden squared distance must be positive, got {d}")
            cid = matrix.id_for(d)
            if cid is None:
                unrealized.append(d)
            else:
                realized.append(d)
                forbidden.add(cid)
    if matrix.class_table is not None:
        for cid in forbidden:
            d = matrix.class_table[cid]
            if d not in realized:
                realized.append(d)

    n = matrix.size
    rows = [0] * n
    if forbidden:
        mask = np.isin(matrix.classes, sorted(forbidden))
        for i in range(n):
            row = 0
            for j in np.flatnonzero(mask[i]):
                row |= 1 << int(j)
            rows[i] = row
    return DistanceGraph(
        n,
        tuple(rows),
        frozenset(forbidden),
        tuple(sorted(set(realized))),
        tuple(sorted(set(unrealized))),
        source=matrix.provenance,
    )


def max_degree(g: DistanceGraph) -> int:
    return max((g.degree(v) for v in range(g.vertex_count)), default=0)


__all__ = ["DistanceGraph", "build_graph", "max_degree"]
