"""Values of x^2 - a*y^2 over Q(sqrt(b)) and their factorization over Q."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import ValueNotInF, ZeroInput, ZeroValue
from .field import BiquadConfig
from .hilbert90 import kernel_decompose
from .rational import RationalLike, is_square, to_rational


@dataclass(frozen=True)
class QuadExtElement:
    """u + v*sqrt(b). ``b`` may be a square; the arithmetic is that of Q[X]/(X^2 - b)."""

    u: Fraction
    v: Fraction
    b: Fraction

    def _check(self, other):
        if self.b != other.b:
            raise ValueError(f"elements over sqrt({self.b}) and sqrt({other.b})")

    def __add__(self, other):
        self._check(other)
        return QuadExtElement(self.u + other.u, self.v + other.v, self.b)

    def __sub__(self, other):
        self._check(other)
        return QuadExtElement(self.u - other.u, self.v - other.v, self.b)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExtElement(self.u * other, self.v * other, self.b)
        self._check(other)
        return QuadExtElement(self.u * other.u + self.b * self.v * other.v, self.u * other.v + self.v * other.u, self.b)

    __rmul__ = __mul__

    def conj(self):
        return QuadExtElement(self.u, -self.v, self.b)

    def __truediv__(self, other):
        self._check(other)
        n = (other * other.conj()).u
        q = self * other.conj()
        return QuadExtElement(q.u / n, q.v / n, self.b)

    def evaluate(self, root: Fraction) -> Fraction:
        """Substitute sqrt(b) -> root (root^2 must equal b)."""
        return self.u + self.v * root

    def __str__(self):
        from .field import format_terms

        return format_terms((self.u, self.v), ("", "rb"))


def quad(u: RationalLike, v: RationalLike, b: RationalLike) -> QuadExtElement:
    return QuadExtElement(to_rational(u), to_rational(v), to_rational(b))


def qform_value(a: RationalLike, x: QuadExtElement, y: QuadExtElement) -> QuadExtElement:
    a = to_rational(a)
    return x * x - (y * y) * a


class QFormDecomposition(NamedTuple):
    x1: Fraction
    y1: Fraction
    x2: Fraction
    y2: Fraction
    value: Fraction
    branch: str


def _represent_with_square(f: Fraction, c: Fraction) -> tuple[Fraction, Fraction]:
    # f = ((f+1)/2)^2 - c^2 ((f-1)/(2c))^2
    return (f + 1) / 2, (f - 1) / (2 * c)


def qform_decompose(a: RationalLike, b: RationalLike, x: QuadExtElement, y: QuadExtElement) -> QFormDecomposition:
    """Find rationals with x^2 - a*y^2 = (x1^2 - a*y1^2)(x2^2 - a*b*y2^2).

    The value x^2 - a*y^2 must be a nonzero rational. Branches, in order:
    b square, a square, a*b square, and the generic case via the field
    Q(sqrt(a), sqrt(a*b)), whose third quadratic subfield is Q(sqrt(b)).
    """
    a, b = to_rational(a), to_rational(b)
    if a == 0 or b == 0:
        raise ValueError("a and b must be nonzero")
    if x.b != b or y.b != b:
        raise ValueError(f"x and y must lie in Q(sqrt({b}))")
    val = qform_value(a, x, y)
    if val.v != 0:
        raise ValueNotInF(f"x^2 - a*y^2 = {val} is not rational")
    f = val.u
    if f == 0:
        raise ZeroValue("x^2 - a*y^2 = 0")

    s = is_square(b)
    if s is not None:
        return QFormDecomposition(x.evaluate(s), y.evaluate(s), Fraction(1), Fraction(0), f, "b-square")
    c = is_square(a)
    if c is not None:
        x1, y1 = _represent_with_square(f, c)
        return QFormDecomposition(x1, y1, Fraction(1), Fraction(0), f, "a-square")
    c = is_square(a * b)
    if c is not None:
        x2, y2 = _represent_with_square(f, c)
        return QFormDecomposition(Fraction(1), Fraction(0), x2, y2, f, "ab-square")

    # a1 = a, a2 = a*b; then r12 = sqrt(a1*a2) = a*sqrt(b), so sqrt(b) = r12 / a
    # and x + y*r1 has coordinates (x.u, y.u, y.v, x.v / a)
    cfg = BiquadConfig(a, a * b)
    e = cfg.element(x.u, y.u, y.v, x.v / a)
    g1, g2 = kernel_decompose(e)
    return QFormDecomposition(g1.c[0], g1.c[1], g2.c[0], g2.c[2], f, "generic")


def pythagorean_triple(m: int, n: int) -> tuple[int, int, int]:
    """Pythagorean triple from l = m + n*i in Q(i).

    t = l / conj(l) has norm one, and clearing the denominator m^2 + n^2 of
    t = ((m^2 - n^2) + 2mn*i) / (m^2 + n^2) gives the triple.
    """
    if m == 0 and n == 0:
        raise ZeroInput("(m, n) = (0, 0)")
    ell = quad(m, n, -1)
    t = ell / ell.conj()
    r = m * m + n * n
    p, q = t.u * r, t.v * r
    assert p.denominator == 1 and q.denominator == 1
    return abs(p.numerator), abs(q.numerator), r


def is_primitive(triple) -> bool:
    return math.gcd(*triple) == 1
