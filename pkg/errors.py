"""Exception hierarchy shared by every package of the toolkit."""
from __future__ import annotations

from typing import Any, Dict, Optional


class DistChromaError(Exception):
    """Base class for all toolkit errors."""


class InputError(DistChromaError, ValueError):
    """Invalid caller input (bad flags, malformed files, violated preconditions)."""


class RationalFormatError(InputError):
    pass


class DimensionMismatchError(InputError):
    pass


class SizeCapError(InputError):
    """Instance larger than the configured cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class UnknownClassError(InputError):
    pass


class DimacsFormatError(InputError):
    pass


class VertexSetMismatchError(InputError):
    pass


class ParityPreconditionError(InputError):
    pass


class UnknownFixtureError(InputError):
    pass


class BudgetExhausted(DistChromaError):
    """A search hit its node budget before proving its answer.

    ``bounds`` holds whatever was known when the search stopped (for instance
    ``{"lower": 3, "upper": 5}``); it is informational only.
    """

    def __init__(
        self,
        what: str,
        nodes_explored: int,
        bounds: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(f"{what}: node budget exhausted after {nodes_explored} nodes")
        self.what = what
        self.nodes_explored = nodes_explored
        self.bounds = dict(bounds or {})


class CertificateError(DistChromaError):
    """A produced certificate did not re-verify."""


__all__ = [
    "DistChromaError",
    "InputError",
    "RationalFormatError",
    "DimensionMismatchError",
    "SizeCapError",
    "UnknownClassError",
    "DimacsFormatError",
    "VertexSetMismatchError",
    "ParityPreconditionError",
    "UnknownFixtureError",
    "BudgetExhausted",
    "CertificateError",
]
