"""Product colorings: forbid the union of two distance sets at once."""
from __future__ import annotations

from functools import reduce
from typing import Sequence

from errors import InputError, VertexSetMismatchError
from solver.coloring import Coloring


def product_coloring(first: Coloring, second: Coloring) -> Coloring:
    """Pair colors: ``v -> first[v] * r + second[v]`` with ``r = second.color_count``.

    Valid on the edge union whenever each factor is valid on its own graph.
    """

    if len(first) != len(second):
        raise VertexSetMismatchError(
            f"colorings cover {len(first)} and {len(second)} vertices"
        )
    r = second.color_count
    assignment = tuple(a * r + b for a, b in zip(first.assignment, second.assignment))
    return Coloring(assignment, first.color_count * r)


def iterated_product(colorings: Sequence[Coloring]) -> Coloring:
    """Fold :func:`product_coloring` left to right; color count is the product."""

    if not colorings:
        raise InputError("need at least one coloring")
    return reduce(product_coloring, colorings)


__all__ = ["product_coloring", "iterated_product"]
