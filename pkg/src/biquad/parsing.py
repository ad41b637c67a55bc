"""Text grammars for field elements, group-ring elements and Q(sqrt(b)) elements.

All three share one shape: ``term (('+'|'-') term)*`` with
``term = coef ['*' symbol] | symbol``. Whitespace is ignored and repeated
symbols are summed.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, ParseError

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sym>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/]))")


def _tokenize(src: str):
    pos = 0
    tokens = []
    n = len(src)
    while pos < n:
        m = _TOKEN_RE.match(src, pos)
        if m is None or m.end() == pos:
            if src[pos:].strip() == "":
                break
            # point at the offending character, not the whitespace before it
            bad = pos + (len(src[pos:]) - len(src[pos:].lstrip()))
            raise ParseError(f"unexpected character {src[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


def parse_terms(src: str, symbols: dict, integral: bool = False) -> list:
    """Parse ``src`` into a coefficient list indexed by ``symbols`` values.

    ``symbols`` maps names to slot indices; a bare coefficient goes to slot 0.
    """
    size = max(symbols.values(), default=0) + 1
    coeffs = [Fraction(0)] * size
    tokens = _tokenize(src)
    i = 0

    def peek():
        return tokens[i]

    def coef():
        nonlocal i
        kind, text, pos = peek()
        if kind != "num":
            raise ParseError("expected a number", pos)
        i += 1
        value = Fraction(int(text))
        if peek()[1] == "/" and peek()[0] == "op":
            slash = peek()[2]
            if integral:
                raise ParseError("expected an integer coefficient", slash)
            i += 1
            kind, text, pos = peek()
            if kind != "num":
                raise ParseError("expected a denominator", pos)
            i += 1
            if int(text) == 0:
                raise DivisionByZero(f"zero denominator at offset {pos}")
            value /= int(text)
        return value

    def symbol():
        nonlocal i
        kind, text, pos = peek()
        if kind != "sym" or text not in symbols:
            raise ParseError(f"expected one of {sorted(symbols)}", pos)
        i += 1
        return symbols[text]

    def term(sign):
        nonlocal i
        kind, text, pos = peek()
        if kind == "num":
            value = coef()
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                slot = symbol()
            else:
                slot = 0
            coeffs[slot] += sign * value
        elif kind == "sym":
            slot = symbol()
            coeffs[slot] += sign
        else:
            raise ParseError("expected a term", pos)

    kind, text, pos = peek()
    sign = 1
    if kind == "op" and text in "+-":
        sign = -1 if text == "-" else 1
        i += 1
    term(sign)
    while True:
        kind, text, pos = peek()
        if kind == "end":
            break
        if kind == "op" and text in "+-":
            i += 1
            term(-1 if text == "-" else 1)
        else:
            raise ParseError(f"unexpected {text!r}", pos)
    return coeffs


ELEMENT_SYMBOLS = {"r1": 1, "r2": 2, "r12": 3}
GROUP_RING_SYMBOLS = {"id": 0, "s1": 1, "s2": 2, "s12": 3}
QUAD_SYMBOLS = {"rb": 1}


def parse_element(src: str, cfg):
    """Parse ``c0 + c1*r1 + c2*r2 + c3*r12`` into an element of ``cfg``."""
    from .field import ExtElement

    return ExtElement(cfg, parse_terms(src, ELEMENT_SYMBOLS))


def parse_group_ring(src: str):
    """Parse an integer combination of ``1``, ``s1``, ``s2``, ``s12``."""
    from .group_ring import GroupRingElement

    c = parse_terms(src, GROUP_RING_SYMBOLS, integral=True)
    return GroupRingElement(*(int(x) for x in c))


def parse_quad(src: str, b):
    """Parse ``u + v*rb`` as an element of Q(sqrt(b))."""
    from .qforms import QuadExtElement

    u, v = parse_terms(src, QUAD_SYMBOLS)
    return QuadExtElement(u, v, Fraction(b))
