from __future__ import annotations

import os
from dataclasses import dataclass, fields
from typing import Any, Dict, Optional

import yaml

from errors import InputError

# Fixed caps: the oracles enumerate exhaustively and must stay tiny.
BRUTE_FORCE_MAX_VERTICES = 12
KDISTANCE_BRUTE_FORCE_MAX_POINTS = 16

_ENV_PREFIX = "DISTCHROMA_"


@dataclass
class Limits:
    """Size caps; overridable through ``DISTCHROMA_*`` environment variables."""

    max_points: int = 20000
    max_graph_vertices: int = 4000
    max_search_vertices: int = 600
    max_line_boundary_points: int = 100000

    @classmethod
    def from_env(cls, environ: Optional[Dict[str, str]] = None) -> "Limits":
        env = os.environ if environ is None else environ
        limits = cls()
        for f in fields(cls):
            raw = env.get(_ENV_PREFIX + f.name.upper())
            if raw is None or raw.strip() == "":
                continue
            try:
                value = int(raw)
            except ValueError as exc:
                raise InputError(f"{_ENV_PREFIX}{f.name.upper()} must be an integer, got {raw!r}") from exc
            if value < 1:
                raise InputError(f"{_ENV_PREFIX}{f.name.upper()} must be positive")
            setattr(limits, f.name, value)
        return limits


@dataclass
class Defaults:
    # Reproducibility
    seed: int = 0
    threads: int = 1

    # Search budgets (vertex assignments / subset extensions)
    node_budget: int = 2_000_000

    # Line-scheme verification
    line_samples: int = 1000
    line_range: int = 100
    line_max_denominator: int = 64

    # Forbidden-set selection for bound reports
    exhaustive_subset_limit: int = 500
    random_subset_count: int = 100

    log_dir: str = "./logs"


def load_defaults(path: Optional[str] = None) -> Defaults:
    """Return :class:`Defaults`, optionally overridden by a YAML file.

    Unknown keys are ignored; values are coerced to the type of the default.
    """

    defaults = Defaults()
    if not path:
        return defaults
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
    except yaml.YAMLError as exc:
        raise InputError(f"malformed config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"config file {path} must contain a mapping")
    known = {f.name: f for f in fields(Defaults)}
    for key, value in data.items():
        if key not in known:
            continue
        current: Any = getattr(defaults, key)
        try:
            setattr(defaults, key, type(current)(value))
        except (TypeError, ValueError) as exc:
            raise InputError(f"config key {key!r}: cannot use {value!r}") from exc
    return defaults


__all__ = [
    "BRUTE_FORCE_MAX_VERTICES",
    "KDISTANCE_BRUTE_FORCE_MAX_POINTS",
    "Limits",
    "Defaults",
    "load_defaults",
]
