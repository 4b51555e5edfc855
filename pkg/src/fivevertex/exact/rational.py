"""Rational scalars and the ``p/q`` wire format."""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` strings to a Fraction.

    Floats are rejected: every quantity in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` (or a bare integer ``"p"``) without whitespace."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational in p/q form: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value) -> str:
    """Render as ``p/q`` with q > 0; integers keep the ``/1``."""
    q = as_rational(value)
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(value) -> Fraction | None:
    """Non-negative square root if ``value`` is the square of a rational, else None."""
    from math import isqrt

    q = as_rational(value)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None
