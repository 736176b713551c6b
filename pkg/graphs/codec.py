"""Class-matrix JSON and loading of "spaces" (point sets or class matrices)."""
from __future__ import annotations

import json
from typing import Any, Dict, Union

import numpy as np

from errors import InputError
from numerics.codec import pointset_from_dict, pointset_to_dict
from numerics.points import PointSet
from numerics.rational import format_rational, parse_rational
from .classes import DistanceClassMatrix

Space = Union[PointSet, DistanceClassMatrix]


def matrix_to_dict(m: DistanceClassMatrix) -> Dict[str, Any]:
    data: Dict[str, Any] = {"size": m.size, "classes": m.classes.tolist()}
    if m.class_table is not None:
        data["class_table"] = {str(k): format_rational(v) for k, v in sorted(m.class_table.items())}
    if m.provenance:
        data["provenance"] = m.provenance
    return data


def matrix_from_dict(data: Dict[str, Any]) -> DistanceClassMatrix:
    try:
        size = data["size"]
        classes = data["classes"]
    except KeyError as exc:
        raise InputError(f"class matrix JSON is missing {exc.args[0]!r}") from exc
    if not isinstance(classes, list) or len(classes) != size:
        raise InputError("classes must be a list of size rows")
    for row in classes:
        if not isinstance(row, list) or len(row) != size:
            raise InputError("every class row must have size entries")
        if any(not isinstance(c, int) or isinstance(c, bool) for c in row):
            raise InputError("class IDs must be integers")
    table = None
    if data.get("class_table") is not None:
        raw = data["class_table"]
        if not isinstance(raw, dict):
            raise InputError("class_table must be an object")
        try:
            table = {int(k): parse_rational(v) for k, v in raw.items()}
        except ValueError as exc:
            raise InputError(f"bad class_table entry: {exc}") from exc
    arr = np.array(classes, dtype=np.int64).reshape(size, size)
    return DistanceClassMatrix(arr, table, provenance=str(data.get("provenance", "")))


def space_to_dict(space: Space) -> Dict[str, Any]:
    if isinstance(space, PointSet):
        return pointset_to_dict(space)
    return matrix_to_dict(space)


def space_from_dict(data: Dict[str, Any]) -> Space:
    if not isinstance(data, dict):
        raise InputError("space JSON must be an object")
    if "points" in data:
        return pointset_from_dict(data)
    if "classes" in data:
        return matrix_from_dict(data)
    raise InputError("JSON is neither a point set nor a class matrix")


def load_space(path: str) -> Space:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return space_from_dict(data)


def save_space(space: Space, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(space_to_dict(space), fh, indent=2)
        fh.write("\n")


__all__ = [
    "Space",
    "matrix_to_dict",
    "matrix_from_dict",
    "space_to_dict",
    "space_from_dict",
    "load_space",
    "save_space",
]
