"""Exact rational arithmetic substrate: scalars, points, point sets."""
from .codec import dumps_pointset, load_pointset, loads_pointset, save_pointset
from .points import (
    Point,
    PointSet,
    find_translates,
    generate_grid,
    make_point,
    scale_pointset,
    squared_distance,
)
from .rational import (
    Rational,
    floor_div,
    format_rational,
    parse_rational,
    parse_rational_list,
    to_rational,
)

__all__ = [
    "Rational",
    "Point",
    "PointSet",
    "make_point",
    "squared_distance",
    "scale_pointset",
    "generate_grid",
    "find_translates",
    "parse_rational",
    "parse_rational_list",
    "format_rational",
    "to_rational",
    "floor_div",
    "dumps_pointset",
    "loads_pointset",
    "save_pointset",
    "load_pointset",
]
