from fractions import Fraction

import pytest
from hypothesis import given

from _gen import nonzero_rationals, rationals
from biquad.errors import DivisionByZero, ParseError
from biquad.rational import format_rational, is_square, parse_rational, rational_arith, rational_json


def test_add_example():
    assert rational_arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_inv_example():
    assert rational_arith("inv", Fraction(-3, 7)) == Fraction(-7, 3)


def test_div_by_zero():
    with pytest.raises(DivisionByZero):
        rational_arith("div", 5, 0)
    with pytest.raises(DivisionByZero):
        rational_arith("inv", 0)
    # the error doubles as a ZeroDivisionError
    with pytest.raises(ZeroDivisionError):
        rational_arith("div", 1, "0")


def test_other_ops_and_strings():
    assert rational_arith("sub", "1/2", "1/3") == Fraction(1, 6)
    assert rational_arith("mul", "-2/3", 3) == -2
    assert rational_arith("neg", "4/6") == Fraction(-2, 3)
    with pytest.raises(ValueError):
        rational_arith("pow", 1, 2)
    with pytest.raises(TypeError):
        rational_arith("add", 1)


@pytest.mark.parametrize(
    "x, root",
    [(Fraction(9, 4), Fraction(3, 2)), (2, None), (-4, None), (0, 0), (Fraction(1, 8), None), (Fraction(49, 25), Fraction(7, 5))],
)
def test_is_square_examples(x, root):
    assert is_square(x) == root


def test_is_square_big_integers():
    n = 10**40 + 7
    assert is_square(n * n) == n
    assert is_square(n * n + 1) is None


@given(rationals)
def test_is_square_of_square(x):
    assert is_square(x * x) == abs(x)


@given(rationals)
def test_is_square_sound(x):
    r = is_square(x)
    if r is not None:
        assert r >= 0 and r * r == x


@given(rationals, rationals, rationals)
def test_field_axioms(x, y, z):
    add = lambda a, b: rational_arith("add", a, b)
    mul = lambda a, b: rational_arith("mul", a, b)
    assert add(add(x, y), z) == add(x, add(y, z))
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
    if x:
        assert mul(x, rational_arith("inv", x)) == 1


@given(rationals)
def test_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x
    j = rational_json(x)
    assert parse_rational(str(j)) == x
    assert isinstance(j, int) == (x.denominator == 1)


@given(nonzero_rationals)
def test_canonical_form(x):
    y = Fraction(x.numerator * 6, x.denominator * 6)
    assert (y.numerator, y.denominator) == (x.numerator, x.denominator)
    assert y.denominator > 0


@pytest.mark.parametrize("bad", ["", "1/", "/2", "1.5", "--1", "a", "1/-2"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_parse_zero_denominator():
    with pytest.raises(DivisionByZero):
        parse_rational("3/0")
