"""Distance classification and distance graphs."""
from .classes import SELF_CLASS, DistanceClassMatrix, classify
from .codec import Space, load_space, matrix_from_dict, matrix_to_dict, save_space
from .dimacs import dumps_dimacs, loads_dimacs, read_dimacs, write_dimacs
from .graph import DistanceGraph, build_graph, max_degree

__all__ = [
    "SELF_CLASS",
    "DistanceClassMatrix",
    "classify",
    "DistanceGraph",
    "build_graph",
    "max_degree",
    "Space",
    "load_space",
    "save_space",
    "matrix_to_dict",
    "matrix_from_dict",
    "dumps_dimacs",
    "loads_dimacs",
    "read_dimacs",
    "write_dimacs",
]
