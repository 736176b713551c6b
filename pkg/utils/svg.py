"""Best-effort SVG rendering of colored planar point sets."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from errors import InputError  # noqa: E402
from numerics.points import PointSet  # noqa: E402
from solver.coloring import Coloring  # noqa: E402

_PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"]


def save_coloring_svg(points: PointSet, coloring: Coloring, path: str, title: str = "") -> None:
    """Scatter the points of a 2-D set colored by ``coloring`` into ``path``."""

    if points.dimension != 2:
        raise InputError("SVG output needs a 2-dimensional point set")
    if len(coloring) != len(points):
        raise InputError("coloring and point set differ in size")
    xs = [float(p[0]) for p in points]
    ys = [float(p[1]) for p in points]
    colors = [_PALETTE[c % len(_PALETTE)] for c in coloring.assignment]
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.scatter(xs, ys, c=colors, s=40, edgecolors="black", linewidths=0.5)
    ax.set_aspect("equal")
    ax.set_title(title or f"{coloring.color_count} colors")
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


__all__ = ["save_coloring_svg"]
