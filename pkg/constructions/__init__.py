"""Explicit colorings and the odd-parity lemma."""
from __future__ import annotations

from .line_scheme import (
    DEFAULT_PAIRS,
    Color,
    LineColoringScheme,
    LineVerification,
    LineViolation,
    boundary_points,
    eval_line_color,
    random_distance_pairs,
    verify_line_scheme,
)
from .parity import (
    DistanceDecomposition,
    DistanceKind,
    ParityVerdict,
    check_odd_parity_solution,
    distance_kind,
    enumerate_odd_parity_solutions,
    is_twice_odd,
)
from .product import iterated_product, product_coloring

__all__ = [
    "Color",
    "DEFAULT_PAIRS",
    "LineColoringScheme",
    "LineViolation",
    "LineVerification",
    "eval_line_color",
    "boundary_points",
    "verify_line_scheme",
    "random_distance_pairs",
    "product_coloring",
    "iterated_product",
    "ParityVerdict",
    "check_odd_parity_solution",
    "enumerate_odd_parity_solutions",
    "DistanceKind",
    "DistanceDecomposition",
    "distance_kind",
    "is_twice_odd",
]
