"""Exact rational arithmetic for the base field Q.

``fractions.Fraction`` already keeps numerator and denominator reduced with a
positive denominator, so it is used directly as the element type.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional, Union

from .errors import DivisionByZero, ParseError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def to_rational(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or ``p/q`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"malformed rational {text!r}", 0)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_json(x: Fraction):
    """JSON value for a rational: an int when integral, else the string ``p/q``."""
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def rational_arith(op: str, x: RationalLike, y: Optional[RationalLike] = None) -> Fraction:
    x = to_rational(x)
    if op == "neg":
        return -x
    if op == "inv":
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / x
    if y is None:
        raise TypeError(f"{op} needs two operands")
    y = to_rational(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise DivisionByZero(f"{format_rational(x)} / 0")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def is_square(x: RationalLike) -> Optional[Fraction]:
    """Return the nonnegative rational square root of ``x``, or None."""
    x = to_rational(x)
    if x < 0:
        return None
    # reduced form: x is a square iff numerator and denominator both are
    rn = math.isqrt(x.numerator)
    if rn * rn != x.numerator:
        return None
    rd = math.isqrt(x.denominator)
    if rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)
