import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from _gen import configs, field_elements, fields, nonzero_element
from biquad import GaloisElement, ext_arith, galois_apply, make_field, norm, subfield_membership
from biquad.errors import DivisionByZero, MixedConfig, NotBiquadratic, NotInSubfield
from biquad.field import NORM_TARGETS

G = GaloisElement
X, Y = sp.symbols("x y")


def oracle(cfg, expr):
    """Coordinates of a polynomial in x = r1, y = r2 reduced mod x^2 - a1, y^2 - a2."""
    a1, a2 = sp.Rational(cfg.a1.numerator, cfg.a1.denominator), sp.Rational(cfg.a2.numerator, cfg.a2.denominator)
    _, r = sp.reduced(sp.expand(expr), [X**2 - a1, Y**2 - a2], X, Y)
    p = sp.Poly(r, X, Y)
    coords = [p.coeff_monomial(m) for m in (1, X, Y, X * Y)]
    return tuple(Fraction(int(c.p), int(c.q)) for c in coords)


def to_sym(e):
    f = [sp.Rational(c.numerator, c.denominator) for c in e.c]
    return f[0] + f[1] * X + f[2] * Y + f[3] * X * Y


@pytest.fixture
def K():
    return make_field(2, 3)


def test_make_field_examples():
    cfg = make_field(2, 3)
    assert (cfg.a1, cfg.a2, cfg.a12) == (2, 3, 6)
    with pytest.raises(NotBiquadratic) as exc:
        make_field(4, 3)
    assert exc.value.which == "a1"
    with pytest.raises(NotBiquadratic) as exc:
        make_field(2, 8)
    assert exc.value.which == "a1a2"
    with pytest.raises(NotBiquadratic) as exc:
        make_field(3, Fraction(1, 9))
    assert exc.value.which == "a2"
    with pytest.raises(NotBiquadratic):
        make_field(0, 3)


def test_negative_parameters_accepted():
    cfg = make_field(-1, -3)
    assert cfg.a12 == 3
    assert cfg.r12 * cfg.r12 == 3


def test_mul_example(K):
    e = ext_arith("mul", K.element(1, 1), K.element(5, 0, 1))
    assert e.c == (5, 5, 1, 1)


def test_inverse_example(K):
    e = K.element(1, 1, 1)
    assert ext_arith("mul", e, ext_arith("inv", e)) == 1
    assert K.r1 * K.r1 == 2


def test_basis_products(K):
    r1, r2, r12 = K.r1, K.r2, K.r12
    assert r1 * r2 == r12
    assert r12 * r12 == 6
    assert r1 * r12 == 2 * r2
    assert r2 * r12 == 3 * r1


def test_division_errors(K):
    with pytest.raises(DivisionByZero):
        ext_arith("inv", K.zero)
    with pytest.raises(DivisionByZero):
        K.one / K.zero


def test_mixed_config(K):
    other = make_field(2, 5)
    with pytest.raises(MixedConfig):
        K.r1 + other.r1
    with pytest.raises(MixedConfig):
        ext_arith("mul", K.r1, other.r1)


@pytest.mark.parametrize(
    "g, e, expected",
    [
        ("s1", (0, 0, 1, 0), (0, 0, -1, 0)),
        ("s1", (0, 1, 0, 0), (0, 1, 0, 0)),
        ("s12", (5, 5, 1, 1), (5, -5, -1, 1)),
        ("s2", (1, 1, 1, 1), (1, -1, 1, -1)),
        ("id", (1, 2, 3, 4), (1, 2, 3, 4)),
    ],
)
def test_galois_examples(K, g, e, expected):
    assert galois_apply(g, K.element(*e)).c == expected


def test_galois_group_table():
    for g in G:
        assert g * g == G.ID
        assert g * G.ID == g
    assert G.S1 * G.S2 == G.S12
    assert G.S12 * G.S1 == G.S2


@pytest.mark.parametrize(
    "target, e, expected",
    [("E3", (1, 1, 0, 0), (-1, 0, 0, 0)), ("E1", (1, 0, 0, 0), (1, 0, 0, 0)), ("E3", (5, 5, 1, 1), (-22, 0, 0, 0))],
)
def test_norm_examples(K, target, e, expected):
    assert norm(target, K.element(*e)).c == expected


def test_norm_subfield_precondition(K):
    with pytest.raises(NotInSubfield):
        norm("F_from_E1", K.r2)
    with pytest.raises(NotInSubfield):
        norm("F_from_E2", K.r1)
    with pytest.raises(ValueError):
        norm("E4", K.one)


@pytest.mark.parametrize(
    "e, flags",
    [((7, 0, 0, 0), (True, True, True, True)), ((1, 0, 0, 1), (False, False, False, True)), ((0, 1, 1, 0), (False, False, False, False))],
)
def test_subfield_examples(K, e, flags):
    assert tuple(subfield_membership(K.element(*e))) == flags


def test_multiplication_against_oracle():
    rnd = random.Random(7)
    for cfg in configs():
        for _ in range(15):
            a, b = nonzero_element(cfg, rnd), nonzero_element(cfg, rnd)
            assert (a * b).c == oracle(cfg, to_sym(a) * to_sym(b))


def test_galois_against_oracle():
    rnd = random.Random(8)
    subs = {G.ID: (1, 1), G.S1: (1, -1), G.S2: (-1, 1), G.S12: (-1, -1)}
    for cfg in configs():
        e = nonzero_element(cfg, rnd)
        for g, (sx, sy) in subs.items():
            assert e.conj(g).c == oracle(cfg, to_sym(e).subs({X: sx * X, Y: sy * Y}, simultaneous=True))


@given(fields().flatmap(lambda c: st.tuples(field_elements(c), field_elements(c), field_elements(c))))
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(field_elements(nonzero=True))
def test_inverse(e):
    assert e * e.inverse() == 1
    assert e / e == 1
    assert (e**-2) * e * e == 1


@given(fields().flatmap(lambda c: st.tuples(field_elements(c), field_elements(c))))
def test_galois_is_ring_automorphism_and_involution(pair):
    a, b = pair
    for g in G:
        assert (a * b).conj(g) == a.conj(g) * b.conj(g)
        assert (a + b).conj(g) == a.conj(g) + b.conj(g)
        assert a.conj(g).conj(g) == a
    assert a.conj(G.S1).conj(G.S2) == a.conj(G.S2).conj(G.S1) == a.conj(G.S12)


@given(field_elements())
def test_fixed_fields(e):
    flags = subfield_membership(e)
    assert (e.conj(G.S1) == e) == flags.in_E1
    assert (e.conj(G.S2) == e) == flags.in_E2
    assert (e.conj(G.S12) == e) == flags.in_E3
    assert all(e.conj(g) == e for g in G) == flags.in_F


@given(fields().flatmap(lambda c: st.tuples(field_elements(c), field_elements(c))))
def test_norm_multiplicative(pair):
    a, b = pair
    for target in ("E1", "E2", "E3", "F_from_E"):
        assert norm(target, a * b) == norm(target, a) * norm(target, b)
    cfg = a.cfg
    a1, b1 = cfg.element(*a.c[:2]), cfg.element(*b.c[:2])
    assert norm("F_from_E1", a1 * b1) == norm("F_from_E1", a1) * norm("F_from_E1", b1)
    a2, b2 = cfg.element(a.c[0], 0, a.c[2]), cfg.element(b.c[0], 0, b.c[2])
    assert norm("F_from_E2", a2 * b2) == norm("F_from_E2", a2) * norm("F_from_E2", b2)


@given(field_elements())
def test_norm_towers(e):
    nf = norm("F_from_E", e)
    assert nf.in_F()
    assert norm("F_from_E1", norm("E1", e)) == nf
    assert norm("F_from_E2", norm("E2", e)) == nf
    # each relative norm lands in its subfield
    assert subfield_membership(norm("E1", e)).in_E1
    assert subfield_membership(norm("E2", e)).in_E2
    assert subfield_membership(norm("E3", e)).in_E3


def test_norm_targets_listed():
    assert set(NORM_TARGETS) == {"E1", "E2", "E3", "F_from_E", "F_from_E1", "F_from_E2"}


def test_int_interop(K):
    e = K.element(1, 2)
    assert 2 * e == e + e
    assert e - 1 == K.element(0, 2)
    assert 1 - e == K.element(0, -2)
    assert 1 / K.r1 == K.element(0, Fraction(1, 2))
    assert K.element(3) == 3 and K.element(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(K.element(1, 2)) == hash(K.element(1, 2))
    assert not K.zero and K.one


def test_rational_extraction(K):
    assert K.element(Fraction(7, 3)).rational() == Fraction(7, 3)
    with pytest.raises(NotInSubfield):
        K.r1.rational()


@given(fields().flatmap(lambda c: st.tuples(field_elements(c), field_elements(c))))
def test_canonical_form(pair):
    # results of arithmetic must compare and hash like the same element typed in
    x, y = pair
    for z in (x * y, x + y, x - y, -x):
        w = z.cfg.element(*z.c)
        assert z == w and hash(z) == hash(w)
        assert z.c == w.c


def test_unreduced_coordinates(K):
    assert K.element(Fraction(2, 4), Fraction(-3, 6)) == K.element(Fraction(1, 2), Fraction(-1, 2))
    assert (K.element(Fraction(1, 3)) * 3) == K.one
    assert (K.r1 - K.r1).is_zero() and not (K.r1 - K.r1)
