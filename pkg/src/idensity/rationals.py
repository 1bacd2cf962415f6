"""Exact rational parsing/rendering and the two infinities.

Every scalar the library reports is either an exact ``Fraction`` or one of
the IEEE infinities (used only as order sentinels, never mixed into finite
arithmetic). Scalars render as ``p/q`` in lowest terms, always with the
denominator, so output is unambiguous and byte-stable.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

INF = float("inf")
NEG_INF = float("-inf")

# An extended real is Fraction | float, the float restricted to +-inf.
ExtReal = object

_RAT_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


def is_finite(value) -> bool:
    return isinstance(value, Fraction)


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def fmt_rational(value: Fraction) -> str:
    """Render as ``p/q`` in lowest terms, denominator always present."""
    return f"{value.numerator}/{value.denominator}"


def fmt_extended(value) -> str:
    if isinstance(value, Fraction):
        return fmt_rational(value)
    if value == INF:
        return "+inf"
    if value == NEG_INF:
        return "-inf"
    raise TypeError(f"not an extended rational: {value!r}")


def fmt_endpoint(value: Fraction) -> str:
    """Interval-grammar endpoint: integer shorthand when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return fmt_rational(value)


def negate_extended(value):
    if isinstance(value, Fraction):
        return -value
    return -value  # float infinities negate fine


def add_extended(a, b):
    a_fin = isinstance(a, Fraction)
    b_fin = isinstance(b, Fraction)
    if a_fin and b_fin:
        return a + b
    if not a_fin and not b_fin and a != b:
        raise ValueError("indeterminate sum of opposite infinities")
    return a if not a_fin else b
