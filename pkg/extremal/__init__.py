"""Clique and k-distance searches, named fixtures and the bound ledger."""
from __future__ import annotations

from .clique import CliqueResult, max_clique
from .fixtures import FIXTURE_NAMES, NumericCrossCheck, fixture, numeric_cross_check
from .kdistance import KDistanceSetResult, kdistance_bruteforce, max_k_distance_set
from .ledger import Bound, BoundLedger, bound_report, forbidden_selection

__all__ = [
    "CliqueResult",
    "max_clique",
    "KDistanceSetResult",
    "max_k_distance_set",
    "kdistance_bruteforce",
    "FIXTURE_NAMES",
    "NumericCrossCheck",
    "fixture",
    "numeric_cross_check",
    "Bound",
    "BoundLedger",
    "forbidden_selection",
    "bound_report",
]
