"""DIMACS edge format: ``p edge N M`` header, ``e u v`` lines, 1-based IDs."""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import List, Set, Tuple

from errors import DimacsFormatError, RationalFormatError
from numerics.rational import format_rational, parse_rational_list
from .graph import DistanceGraph


def dumps_dimacs(g: DistanceGraph) -> str:
    lines: List[str] = []
    if g.source:
        lines.append("c source " + " ".join(g.source.split()))
    if g.forbidden_distances:
        lines.append("c forbidden " + ",".join(format_rational(d) for d in g.forbidden_distances))
    edges = list(g.edges())
    lines.append(f"p edge {g.vertex_count} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_dimacs(g: DistanceGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_dimacs(g))


def loads_dimacs(text: str) -> DistanceGraph:
    """Strict parser; duplicate edges count once, the header count must match.

    The ``c source`` and ``c forbidden`` comments written by :func:`dumps_dimacs`
    are read back; other comments are ignored.
    """

    header: Tuple[int, int] | None = None
    edges: Set[Tuple[int, int]] = set()
    source = "dimacs"
    forbidden: Tuple[Fraction, ...] = ()
    for lineno, line in enumerate(text.splitlines(), start=1):
        entries = line.strip().split()
        if not entries:
            continue
        if entries[0] == "c":
            if len(entries) >= 3 and entries[1] == "source":
                source = " ".join(entries[2:])
            elif len(entries) >= 2 and entries[1] == "forbidden":
                try:
                    forbidden = tuple(sorted(set(parse_rational_list(" ".join(entries[2:])))))
                except RationalFormatError as exc:
                    raise DimacsFormatError(f"line {lineno}: bad forbidden list: {exc}") from exc
            continue
        tag = entries[0]
        if tag == "p":
            if header is not None:
                raise DimacsFormatError(f"line {lineno}: duplicate problem line")
            if len(entries) != 4 or entries[1] not in ("edge", "col"):
                raise DimacsFormatError(f"line {lineno}: expected 'p edge N M'")
            try:
                header = (int(entries[2]), int(entries[3]))
            except ValueError as exc:
                raise DimacsFormatError(f"line {lineno}: non-integer header") from exc
            if header[0] < 0 or header[1] < 0:
                raise DimacsFormatError(f"line {lineno}: negative header values")
        elif tag == "e":
            if header is None:
                raise DimacsFormatError(f"line {lineno}: edge before problem line")
            if len(entries) != 3:
                raise DimacsFormatError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(entries[1]), int(entries[2])
            except ValueError as exc:
                raise DimacsFormatError(f"line {lineno}: non-integer vertex") from exc
            if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                raise DimacsFormatError(f"line {lineno}: vertex out of range 1..{header[0]}")
            if u == v:
                raise DimacsFormatError(f"line {lineno}: self-loop")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise DimacsFormatError(f"line {lineno}: unknown line type {tag!r}")
    if header is None:
        raise DimacsFormatError("missing problem line")
    if len(edges) != header[1]:
        raise DimacsFormatError(f"header announces {header[1]} edges, found {len(edges)}")
    g = DistanceGraph.from_edges(header[0], sorted(edges), source=source)
    return dataclasses.replace(g, forbidden_distances=forbidden)


def read_dimacs(path: str) -> DistanceGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_dimacs(fh.read())


__all__ = ["dumps_dimacs", "loads_dimacs", "write_dimacs", "read_dimacs"]
