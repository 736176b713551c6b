"""PointSet JSON format: ``{"dimension": n, "points": [["a/b", ...], ...]}``."""
from __future__ import annotations

import json
from typing import Any, Dict

from errors import InputError
from .points import PointSet
from .rational import format_rational, parse_rational


def pointset_to_dict(ps: PointSet) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "dimension": ps.dimension,
        "points": [[format_rational(c) for c in p] for p in ps.points],
    }
    if ps.labels is not None:
        data["labels"] = list(ps.labels)
    return data


def pointset_from_dict(data: Dict[str, Any]) -> PointSet:
    if not isinstance(data, dict):
        raise InputError("point set JSON must be an object")
    try:
        dimension = data["dimension"]
        raw_points = data["points"]
    except KeyError as exc:
        raise InputError(f"point set JSON is missing {exc.args[0]!r}") from exc
    if not isinstance(dimension, int) or isinstance(dimension, bool):
        raise InputError("dimension must be an integer")
    if not isinstance(raw_points, list):
        raise InputError("points must be a list")
    points = []
    for row in raw_points:
        if not isinstance(row, list):
            raise InputError("each point must be a list of rational strings")
        points.append(tuple(parse_rational(c) for c in row))
    labels = data.get("labels")
    return PointSet(dimension, tuple(points), tuple(labels) if labels is not None else None)


def dumps_pointset(ps: PointSet) -> str:
    return json.dumps(pointset_to_dict(ps), indent=2)


def loads_pointset(text: str) -> PointSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return pointset_from_dict(data)


def save_pointset(ps: PointSet, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_pointset(ps) + "\n")


def load_pointset(path: str) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_pointset(fh.read())


__all__ = [
    "pointset_to_dict",
    "pointset_from_dict",
    "dumps_pointset",
    "loads_pointset",
    "save_pointset",
    "load_pointset",
]
