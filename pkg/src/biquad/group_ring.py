"""The group ring Z[G] of the Klein four-group and its action on E^x."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroElement
from .field import ExtElement, GaloisElement, format_terms


@dataclass(frozen=True)
class GroupRingElement:
    """c0*id + c1*s1 + c2*s2 + c3*s12 with integer coefficients."""

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @property
    def coeffs(self) -> tuple:
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return GroupRingElement(*(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GroupRingElement(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return GroupRingElement(*(other * x for x in self.coeffs))
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        c0, c1, c2, c3 = self.coeffs
        d0, d1, d2, d3 = other.coeffs
        return GroupRingElement(
            c0 * d0 + c1 * d1 + c2 * d2 + c3 * d3,
            c0 * d1 + c1 * d0 + c2 * d3 + c3 * d2,
            c0 * d2 + c1 * d3 + c2 * d0 + c3 * d1,
            c0 * d3 + c1 * d2 + c2 * d1 + c3 * d0,
        )

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __str__(self):
        return format_terms(self.coeffs, ("", "s1", "s2", "s12"))

    @classmethod
    def basis(cls, g: GaloisElement) -> "GroupRingElement":
        c = [0, 0, 0, 0]
        c[GaloisElement(g)] = 1
        return cls(*c)


ZERO = GroupRingElement()
ONE = GroupRingElement(1)
S1 = GroupRingElement(0, 1)
S2 = GroupRingElement(0, 0, 1)
S12 = GroupRingElement(0, 0, 0, 1)


def gr_arith(op: str, u: GroupRingElement, v: GroupRingElement | None = None) -> GroupRingElement:
    if op == "neg":
        return -u
    if v is None:
        raise TypeError(f"{op} needs two operands")
    if op == "add":
        return u + v
    if op == "mul":
        return u * v
    raise ValueError(f"unknown operation {op!r}")


def act(u: GroupRingElement, e: ExtElement) -> ExtElement:
    """gamma^c0 * s1(gamma)^c1 * s2(gamma)^c2 * s12(gamma)^c3."""
    if e.is_zero():
        raise ZeroElement("Z[G] acts on E^x; got 0")
    result = e.cfg.one
    for g, k in zip(GaloisElement, u.coeffs):
        if k:
            result = result * e.conj(g) ** k
    return result
