"""Exact rational scalars.

``fractions.Fraction`` already keeps every value in canonical form
(positive denominator, reduced) over Python's arbitrary precision integers,
so it is used directly as the scalar type. This module adds the strict text
format used by every file and flag of the toolkit.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, List, Union

from errors import RationalFormatError

Rational = Fraction

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` into a :class:`Fraction`.

    Only canonical renderings are accepted: no decimals, no signs other than a
    leading ``-``, no zero or unit denominators, no common factors, no ``-0``.
    """

    if not isinstance(text, str):
        raise RationalFormatError(f"rational must be given as a string, got {type(text).__name__}")
    raw = text.strip()
    match = _RATIONAL_RE.match(raw)
    if not match:
        raise RationalFormatError(f"not a canonical rational: {text!r}")
    sign, num_s, den_s = match.groups()
    num = int(num_s)
    if sign and num == 0:
        raise RationalFormatError(f"non-canonical zero: {text!r}")
    if den_s is None:
        return Fraction(-num if sign else num)
    den = int(den_s)
    if den == 1 or math.gcd(num, den) != 1:
        raise RationalFormatError(f"non-canonical rational: {text!r}")
    return Fraction(-num if sign else num, den)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and canonical strings; floats are refused."""

    if isinstance(value, bool):
        raise RationalFormatError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise RationalFormatError(f"cannot use {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str) -> List[Fraction]:
    """Parse a comma separated list such as ``"1,2,5/4"``."""

    parts = [p for p in (s.strip() for s in text.split(",")) if p]
    if not parts:
        raise RationalFormatError("empty rational list")
    return [parse_rational(p) for p in parts]


def format_rational_list(values: Iterable[Fraction]) -> List[str]:
    return [format_rational(v) for v in values]


def floor_div(x: Fraction, y: Fraction) -> int:
    """``floor(x / y)`` with floor semantics for negative quotients."""

    return math.floor(Fraction(x) / Fraction(y))


__all__ = [
    "Rational",
    "RationalLike",
    "parse_rational",
    "to_rational",
    "format_rational",
    "parse_rational_list",
    "format_rational_list",
    "floor_div",
]
