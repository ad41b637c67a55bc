"""The biquadratic field E = Q(sqrt(a1), sqrt(a2)) and its Klein four-group action.

Elements are stored as four rational coordinates over the ordered basis
``1, r1, r2, r12`` where ``r1 = sqrt(a1)``, ``r2 = sqrt(a2)`` and the third
root is fixed as ``r12 = r1 * r2`` (never its negative).

Galois action follows the convention that sigma_i fixes sqrt(a_i) and negates
the other generator root::

    s1:  r1 ->  r1,  r2 -> -r2,  r12 -> -r12      (fixes E1 = Q(r1))
    s2:  r1 -> -r1,  r2 ->  r2,  r12 -> -r12      (fixes E2 = Q(r2))
    s12: r1 -> -r1,  r2 -> -r2,  r12 ->  r12      (fixes E3 = Q(r12))

This is the reverse of the textbook Kronecker-delta reading, and is what
makes Gal(E/E1) = {id, s1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, NamedTuple

from .errors import DivisionByZero, MixedConfig, NotBiquadratic, NotInSubfield
from .rational import RationalLike, format_rational, is_square, rational_json, to_rational



class GaloisElement(enum.IntEnum):
    """Elements of Gal(E/F) = Z/2 x Z/2; the value bits say which generators occur."""

    ID = 0
    S1 = 1
    S2 = 2
    S12 = 3

    def __mul__(self, other):
        if not isinstance(other, GaloisElement):
            return NotImplemented
        return GaloisElement(int(self) ^ int(other))

    @property
    def label(self) -> str:
        return ("id", "s1", "s2", "s12")[self]

    @classmethod
    def parse(cls, name: str) -> "GaloisElement":
        try:
            return cls(("id", "s1", "s2", "s12").index(name))
        except ValueError:
            raise ValueError(f"unknown Galois element {name!r}") from None


# coordinate sign pattern of each automorphism on (1, r1, r2, r12)
_SIGNS = {
    GaloisElement.ID: (1, 1, 1, 1),
    GaloisElement.S1: (1, 1, -1, -1),
    GaloisElement.S2: (1, -1, 1, -1),
    GaloisElement.S12: (1, -1, -1, 1),
}


@dataclass(frozen=True)
class BiquadConfig:
    """Parameters a1, a2 of E = Q(sqrt(a1), sqrt(a2)); use :func:`make_field` to build one."""

    a1: Fraction
    a2: Fraction

    @property
    def a12(self) -> Fraction:
        return self.a1 * self.a2

    @cached_property
    def _ints(self) -> tuple:
        return (self.a1.numerator, self.a1.denominator, self.a2.numerator, self.a2.denominator)

    def element(self, f0=0, f1=0, f2=0, f3=0) -> "ExtElement":
        return ExtElement(self, (to_rational(f0), to_rational(f1), to_rational(f2), to_rational(f3)))

    def coerce(self, x) -> "ExtElement":
        if isinstance(x, ExtElement):
            if x.cfg != self:
                raise MixedConfig(f"element of {x.cfg} used with {self}")
            return x
        return self.element(x)

    @property
    def zero(self) -> "ExtElement":
        return self.element(0)

    @property
    def one(self) -> "ExtElement":
        return self.element(1)

    @property
    def r1(self) -> "ExtElement":
        return self.element(0, 1)

    @property
    def r2(self) -> "ExtElement":
        return self.element(0, 0, 1)

    @property
    def r12(self) -> "ExtElement":
        return self.element(0, 0, 0, 1)

    def to_json(self) -> dict:
        return {"a1": rational_json(self.a1), "a2": rational_json(self.a2)}


def make_field(a1: RationalLike, a2: RationalLike) -> BiquadConfig:
    """Validate (a1, a2) and return the configuration of a genuine biquadratic field."""
    a1, a2 = to_rational(a1), to_rational(a2)
    if a1 == 0 or a2 == 0:
        raise NotBiquadratic("a1" if a1 == 0 else "a2", 0)
    for which, value in (("a1", a1), ("a2", a2), ("a1a2", a1 * a2)):
        if is_square(value) is not None:
            raise NotBiquadratic(which, format_rational(value))
    return BiquadConfig(a1, a2)


class SubfieldFlags(NamedTuple):
    in_F: bool
    in_E1: bool
    in_E2: bool
    in_E3: bool


class ExtElement:
    """f0 + f1*r1 + f2*r2 + f3*r12 in E.

    Stored as integer numerators over one positive common denominator, kept
    in lowest terms so equal elements have equal representations. ``c`` gives
    the coordinates as Fractions.
    """

    __slots__ = ("cfg", "_n", "_d", "_c")

    def __init__(self, cfg: BiquadConfig, coords: Iterable[Fraction]):
        coords = tuple(Fraction(x) for x in coords)
        d = lcm(*(x.denominator for x in coords))
        self.cfg = cfg
        self._n = tuple(x.numerator * (d // x.denominator) for x in coords)
        self._d = d
        self._c = coords

    @classmethod
    def _make(cls, cfg, n0, n1, n2, n3, d):
        g = gcd(n0, n1, n2, n3, d)
        if d < 0:
            g = -g
        e = object.__new__(cls)
        e.cfg = cfg
        if g != 1:
            e._n = (n0 // g, n1 // g, n2 // g, n3 // g)
            e._d = d // g
        else:
            e._n = (n0, n1, n2, n3)
            e._d = d
        e._c = None
        return e

    @classmethod
    def _raw(cls, cfg, n, d):
        # caller guarantees (n, d) is already reduced with d > 0
        e = object.__new__(cls)
        e.cfg = cfg
        e._n = n
        e._d = d
        e._c = None
        return e

    @property
    def c(self) -> tuple:
        c = self._c
        if c is None:
            d = self._d
            c = self._c = tuple(Fraction(x, d) for x in self._n)
        return c

    @property
    def f0(self):
        return self.c[0]

    @property
    def f1(self):
        return self.c[1]

    @property
    def f2(self):
        return self.c[2]

    @property
    def f3(self):
        return self.c[3]

    def _other(self, other) -> "ExtElement | None":
        if isinstance(other, ExtElement):
            if other.cfg is not self.cfg and other.cfg != self.cfg:
                raise MixedConfig(f"cannot combine elements of {self.cfg} and {other.cfg}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ExtElement(self.cfg, (other, 0, 0, 0))
        return None

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self._n == other._n and self._d == other._d and self.cfg == other.cfg
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.c == (other, 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        return hash((self.cfg, self.c))

    def __bool__(self):
        return any(self._n)

    def is_zero(self) -> bool:
        return not any(self._n)

    def __repr__(self):
        return f"ExtElement({format_element(self)!r}, a1={self.cfg.a1}, a2={self.cfg.a2})"

    def __str__(self):
        return format_element(self)

    def __neg__(self):
        return ExtElement._raw(self.cfg, tuple(-x for x in self._n), self._d)

    def _addsub(self, o, sign):
        dp, dq = self._d, o._d
        p0, p1, p2, p3 = self._n
        q0, q1, q2, q3 = o._n
        if dp == dq:
            return ExtElement._make(self.cfg, p0 + sign * q0, p1 + sign * q1, p2 + sign * q2, p3 + sign * q3, dp)
        return ExtElement._make(
            self.cfg,
            p0 * dq + sign * q0 * dp,
            p1 * dq + sign * q1 * dp,
            p2 * dq + sign * q2 * dp,
            p3 * dq + sign * q3 * dp,
            dp * dq,
        )

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._addsub(o, 1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._addsub(o, -1)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o._addsub(self, -1)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        # a1 = A1/B1, a2 = A2/B2; everything is scaled by B1*B2 to stay integral
        A1, B1, A2, B2 = self.cfg._ints
        p0, p1, p2, p3 = self._n
        q0, q1, q2, q3 = o._n
        B12 = B1 * B2
        return ExtElement._make(
            self.cfg,
            B12 * p0 * q0 + A1 * B2 * p1 * q1 + A2 * B1 * p2 * q2 + A1 * A2 * p3 * q3,
            B12 * (p0 * q1 + p1 * q0) + A2 * B1 * (p2 * q3 + p3 * q2),
            B12 * (p0 * q2 + p2 * q0) + A1 * B2 * (p1 * q3 + p3 * q1),
            B12 * (p0 * q3 + p3 * q0 + p1 * q2 + p2 * q1),
            self._d * o._d * B12,
        )

    __rmul__ = __mul__

    def inverse(self) -> "ExtElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in E")
        # e * s12(e) = (M0 + M3*r12)/dm lies in E3 = Q(r12); invert it there, then multiply back
        A1, B1, A2, B2 = self.cfg._ints
        g = self.conj(GaloisElement.S12)
        m = self * g
        M0, _, _, M3 = m._n
        s = m._d * B1 * B2
        inv = ExtElement._make(self.cfg, M0 * s, 0, 0, -M3 * s, M0 * M0 * B1 * B2 - A1 * A2 * M3 * M3)
        return g * inv

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = ExtElement._raw(self.cfg, (1, 0, 0, 0), 1)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conj(self, g: GaloisElement) -> "ExtElement":
        n0, n1, n2, n3 = self._n
        if g is GaloisElement.S1:
            n = (n0, n1, -n2, -n3)
        elif g is GaloisElement.S2:
            n = (n0, -n1, n2, -n3)
        elif g is GaloisElement.S12:
            n = (n0, -n1, -n2, n3)
        else:
            sg = _SIGNS[GaloisElement(g)]
            n = tuple(x if s > 0 else -x for x, s in zip(self._n, sg))
        return ExtElement._raw(self.cfg, n, self._d)

    def in_F(self) -> bool:
        n = self._n
        return not (n[1] or n[2] or n[3])

    def rational(self) -> Fraction:
        if not self.in_F():
            raise NotInSubfield(f"{format_element(self)} is not in Q")
        return self.c[0]

    def to_json(self) -> dict:
        return {f"f{i}": rational_json(x) for i, x in enumerate(self.c)}


def ext_arith(op: str, e: ExtElement, e2: ExtElement | None = None) -> ExtElement:
    if op == "inv":
        return e.inverse()
    if op == "neg":
        return -e
    if e2 is None:
        raise TypeError(f"{op} needs two operands")
    if e.cfg != e2.cfg:
        raise MixedConfig(f"cannot combine elements of {e.cfg} and {e2.cfg}")
    if op == "add":
        return e + e2
    if op == "sub":
        return e - e2
    if op == "mul":
        return e * e2
    if op == "div":
        return e / e2
    raise ValueError(f"unknown operation {op!r}")


def galois_apply(g: GaloisElement | str, e: ExtElement) -> ExtElement:
    if isinstance(g, str):
        g = GaloisElement.parse(g)
    return e.conj(g)


NORM_TARGETS = ("E1", "E2", "E3", "F_from_E", "F_from_E1", "F_from_E2")


def norm(target: str, e: ExtElement) -> ExtElement:
    """Relative norm of ``e``.

    ``E1``/``E2``/``E3`` give N_{E/Ei}(e) = e * sigma(e) with sigma the generator
    of Gal(E/Ei); ``F_from_E`` multiplies all four conjugates; ``F_from_E1`` and
    ``F_from_E2`` are the quadratic norms of an element already in that subfield.
    """
    G = GaloisElement
    if target == "E1":
        return e * e.conj(G.S1)
    if target == "E2":
        return e * e.conj(G.S2)
    if target == "E3":
        return e * e.conj(G.S12)
    if target == "F_from_E":
        m = e * e.conj(G.S12)
        return m * m.conj(G.S1)
    if target == "F_from_E1":
        if e.c[2] or e.c[3]:
            raise NotInSubfield(f"{format_element(e)} is not in E1")
        return e * e.conj(G.S2)
    if target == "F_from_E2":
        if e.c[1] or e.c[3]:
            raise NotInSubfield(f"{format_element(e)} is not in E2")
        return e * e.conj(G.S1)
    raise ValueError(f"unknown norm target {target!r}")


def subfield_membership(e: ExtElement) -> SubfieldFlags:
    _, f1, f2, f3 = e.c
    return SubfieldFlags(
        in_F=not (f1 or f2 or f3),
        in_E1=not (f2 or f3),
        in_E2=not (f1 or f3),
        in_E3=not (f1 or f2),
    )


_ROOT_NAMES = ("", "r1", "r2", "r12")


def format_element(e: ExtElement, roots=_ROOT_NAMES) -> str:
    """Canonical text form, e.g. ``5 + 5*r1 + r2 + r12``; parses back to ``e``."""
    return format_terms(e.c, roots)


def format_terms(coords, roots) -> str:
    parts = []
    for x, root in zip(coords, roots):
        if x == 0:
            continue
        sign = "-" if x < 0 else "+"
        mag = -x if x < 0 else x
        if not root:
            body = format_rational(mag)
        elif mag == 1:
            body = root
        else:
            body = f"{format_rational(mag)}*{root}"
        parts.append((sign, body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
