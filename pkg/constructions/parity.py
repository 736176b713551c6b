"""Parity facts behind two-colorings of the rational plane.

For odd ``p, q`` every primitive solution of ``q(a^2 + b^2) = 2 p c^2`` has
``a``, ``b`` and ``c`` odd; closed walks with steps of squared length
``2p/q`` are then even, so such single-distance graphs are bipartite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from errors import InputError, ParityPreconditionError
from numerics.rational import format_rational


@dataclass(frozen=True)
class ParityVerdict:
    a_odd: bool
    b_odd: bool
    c_odd: bool

    @property
    def all_odd(self) -> bool:
        return self.a_odd and self.b_odd and self.c_odd

    def to_json(self) -> Dict[str, Any]:
        return {"a_odd": self.a_odd, "b_odd": self.b_odd, "c_odd": self.c_odd, "all_odd": self.all_odd}


def _require_odd_positive(name: str, value: int) -> None:
    if value <= 0 or value % 2 == 0:
        raise ParityPreconditionError(f"{name} must be an odd positive integer, got {value}")


def check_odd_parity_solution(a: int, b: int, c: int, p: int, q: int) -> ParityVerdict:
    """Recompute the parities of a primitive solution.

    Raises :class:`ParityPreconditionError` unless ``gcd(a, b, c) = 1``,
    ``c > 0``, ``p, q`` odd positive and ``q(a^2 + b^2) = 2 p c^2``.
    """

    _require_odd_positive("p", p)
    _require_odd_positive("q", q)
    if c <= 0:
        raise ParityPreconditionError("c must be positive")
    if math.gcd(a, b, c) != 1:
        raise ParityPreconditionError(f"gcd({a}, {b}, {c}) != 1")
    if q * (a * a + b * b) != 2 * p * c * c:
        raise ParityPreconditionError(f"{q}*({a}^2+{b}^2) != 2*{p}*{c}^2")
    return ParityVerdict(a % 2 == 1, b % 2 == 1, c % 2 == 1)


def enumerate_odd_parity_solutions(p: int, q: int, c_max: int) -> List[Tuple[int, int, int]]:
    """All primitive ``(a, b, c)`` with ``a >= b >= 0`` and ``0 < c <= c_max``."""

    _require_odd_positive("p", p)
    _require_odd_positive("q", q)
    if c_max < 1:
        raise InputError("c_max must be >= 1")
    found: List[Tuple[int, int, int]] = []
    for c in range(1, c_max + 1):
        rhs = 2 * p * c * c
        if rhs % q:
            continue
        total = rhs // q  # a^2 + b^2
        for b in range(math.isqrt(total // 2) + 1):
            rest = total - b * b
            a = math.isqrt(rest)
            if a * a == rest and a >= b and math.gcd(a, b, c) == 1:
                found.append((a, b, c))
    return found


class DistanceKind(str, Enum):
    ODD_RATIO = "odd_ratio"  # r^2 * p/q
    TWICE_ODD_RATIO = "twice_odd_ratio"  # r^2 * 2p/q


@dataclass(frozen=True)
class DistanceDecomposition:
    kind: DistanceKind
    p: int
    q: int
    scale: Fraction  # r^2, a power of four

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "p": self.p, "q": self.q, "scale": format_rational(self.scale)}


def _two_adic(n: int) -> Tuple[int, int]:
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v, n


def distance_kind(squared: Fraction) -> DistanceDecomposition:
    """Write ``squared = r^2 * p/q`` or ``r^2 * 2p/q`` with ``p, q`` odd.

    ``r`` is a power of two; which form applies is fixed by the parity of the
    2-adic valuation of ``squared``.
    """

    squared = Fraction(squared)
    if squared <= 0:
        raise InputError("squared distance must be positive")
    vn, p = _two_adic(squared.numerator)
    vd, q = _two_adic(squared.denominator)
    v = vn - vd
    if v % 2 == 0:
        return DistanceDecomposition(DistanceKind.ODD_RATIO, p, q, Fraction(2) ** v)
    return DistanceDecomposition(DistanceKind.TWICE_ODD_RATIO, p, q, Fraction(2) ** (v - 1))


def is_twice_odd(squared: Fraction) -> bool:
    return distance_kind(squared).kind is DistanceKind.TWICE_ODD_RATIO


__all__ = [
    "ParityVerdict",
    "check_odd_parity_solution",
    "enumerate_odd_parity_solutions",
    "DistanceKind",
    "DistanceDecomposition",
    "distance_kind",
    "is_twice_odd",
]
