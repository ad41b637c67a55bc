import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _gen import nonzero_rationals, rational
from biquad import pythagorean_triple, qform_decompose, qform_value, quad
from biquad.errors import ValueNotInF, ZeroInput, ZeroValue
from biquad.field import BiquadConfig
from biquad.qforms import _represent_with_square, is_primitive
from biquad.rational import is_square


def check(a, b, d):
    a, b = Fraction(a), Fraction(b)
    lhs = (d.x1**2 - a * d.y1**2) * (d.x2**2 - a * b * d.y2**2)
    return lhs == d.value


@pytest.mark.parametrize(
    "x, y, expected",
    [((1, 2), (1, 1), (5, 0)), ((1, 0), (0, 0), (1, 0)), ((0, 1), (0, 0), (3, 0))],
)
def test_value_examples(x, y, expected):
    v = qform_value(2, quad(*x, 3), quad(*y, 3))
    assert (v.u, v.v) == expected


def test_worked_generic_case():
    d = qform_decompose(2, 3, quad(1, 2, 3), quad(1, 1, 3))
    assert (d.x1, d.y1, d.x2, d.y2, d.value) == (1, 1, 1, 1, 5)
    assert d.branch == "generic"
    assert (1 - 2) * (1 - 6) == 5


def test_a_square_case():
    d = qform_decompose(4, 3, quad(3, 0, 3), quad(1, 0, 3))
    assert (d.x1, d.y1, d.x2, d.y2, d.value, d.branch) == (3, 1, 1, 0, 5, "a-square")


def test_b_square_case():
    d = qform_decompose(2, 9, quad(7, 0, 9), quad(0, 0, 9))
    assert (d.x1, d.y1, d.x2, d.y2, d.value, d.branch) == (7, 0, 1, 0, 49, "b-square")


def test_ab_square_case():
    # a = 2, b = 8: ab = 16
    d = qform_decompose(2, 8, quad(3, 0, 8), quad(1, 0, 8))
    assert d.branch == "ab-square" and d.value == 7 and check(2, 8, d)


def test_branch_precedence():
    # a and b both squares: b-square wins
    assert qform_decompose(4, 9, quad(3, 0, 9), quad(1, 0, 9)).branch == "b-square"
    # a and ab squares (b square too) -> b-square; a square only -> a-square
    assert qform_decompose(4, 2, quad(3, 0, 2), quad(1, 0, 2)).branch == "a-square"


def test_errors():
    with pytest.raises(ValueNotInF):
        qform_decompose(2, 3, quad(1, 1, 3), quad(0, 0, 3))
    with pytest.raises(ZeroValue):
        qform_decompose(4, 3, quad(2, 0, 3), quad(1, 0, 3))
    with pytest.raises(ValueError):
        qform_decompose(2, 3, quad(1, 0, 5), quad(1, 0, 3))


def test_generic_embedding_reexpands():
    # e = x + y*r1 under a1 = a, a2 = a*b must re-expand to the same (x, y)
    rnd = random.Random(21)
    for _ in range(50):
        a, b = Fraction(rnd.choice([2, 3, 5, -7])), Fraction(rnd.choice([3, 7, -1, 11]))
        cfg = BiquadConfig(a, a * b)
        x, y = quad(rational(rnd), rational(rnd), b), quad(rational(rnd), rational(rnd), b)
        e = cfg.element(x.u, y.u, y.v, x.v / a)
        sqrt_b = cfg.r12 * Fraction(1, a)
        assert sqrt_b * sqrt_b == b
        assert e == (x.u + x.v * sqrt_b) + (y.u + y.v * sqrt_b) * cfg.r1


@given(nonzero_rationals, nonzero_rationals)
def test_representing_identity(f, c):
    x, y = _represent_with_square(f, c)
    assert x * x - c * c * y * y == f


def _planted(rnd, branch):
    """Random (a, b, x, y) whose value is a nonzero rational, landing in ``branch``."""
    sq = lambda: Fraction(rnd.randint(1, 9), rnd.randint(1, 4)) ** 2
    ns = lambda: rnd.choice([2, 3, 5, 6, 7, 10, -1, -2, -3, Fraction(2, 3), Fraction(-5, 7)])
    if branch == "b-square":
        a, b = Fraction(ns()), sq()
    elif branch == "a-square":
        a, b = sq(), Fraction(ns())
    elif branch == "ab-square":
        b = Fraction(ns())
        a = b * sq()
    else:
        while True:
            a, b = Fraction(ns()), Fraction(ns())
            if is_square(a * b) is None:
                break
    # (x1 + y1*sqrt(a))(x2 + y2*sqrt(ab)) = x + y*sqrt(a) with
    # x = x1*x2 + a*y1*y2*sqrt(b) and y = y1*x2 + x1*y2*sqrt(b); its value is rational
    x1, y1, x2, y2 = (rational(rnd, 6, 3) for _ in range(4))
    x = quad(x1 * x2, a * y1 * y2, b)
    y = quad(y1 * x2, x1 * y2, b)
    return a, b, x, y


BRANCHES = ["b-square", "a-square", "ab-square", "generic"]


@pytest.mark.parametrize("branch", BRANCHES)
def test_randomized_branches(branch):
    rnd = random.Random(BRANCHES.index(branch))
    done = 0
    while done < 100:
        a, b, x, y = _planted(rnd, branch)
        v = qform_value(a, x, y)
        assert v.v == 0
        if v.u == 0:
            continue
        d = qform_decompose(a, b, x, y)
        assert d.branch == branch
        assert check(a, b, d)
        done += 1


def test_pythagorean_examples():
    assert pythagorean_triple(2, 1) == (3, 4, 5)
    assert pythagorean_triple(3, 2) == (5, 12, 13)
    assert pythagorean_triple(1, 1) == (0, 2, 2)
    with pytest.raises(ZeroInput):
        pythagorean_triple(0, 0)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_pythagorean_identity(m, n):
    if m == 0 and n == 0:
        return
    p, q, r = pythagorean_triple(m, n)
    assert p * p + q * q == r * r
    assert (p, q, r) == (abs(m * m - n * n), abs(2 * m * n), m * m + n * n)


@given(st.integers(2, 500), st.data())
def test_primitive_triples(m, data):
    n = data.draw(st.integers(1, m - 1))
    if math.gcd(m, n) != 1 or (m - n) % 2 == 0:
        return
    assert is_primitive(pythagorean_triple(m, n))
