from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ratknot.arith import egcd, format_rational, modinv, parse_rational, rat_reduce

ints = st.integers(min_value=-10**30, max_value=10**30)
rationals = st.builds(Fraction, ints, ints.filter(bool))


@pytest.mark.parametrize(
    "n, d, num, den",
    [(-4, -6, 2, 3), (0, 5, 0, 1), (6, 4, 3, 2), (3, -9, -1, 3)],
)
def test_rat_reduce(n, d, num, den):
    x = rat_reduce(n, d)
    assert (x.numerator, x.denominator) == (num, den)


def test_rat_reduce_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_reduce(1, 0)


def test_rat_reduce_rejects_floats():
    with pytest.raises(TypeError):
        rat_reduce(1.5, 2)


@pytest.mark.parametrize("a, b, expected", [(5, 2, (1, 1, -2)), (0, 7, (7, 0, 1)), (12, 8, (4, 1, -1))])
def test_egcd_examples(a, b, expected):
    g, x, y = egcd(a, b)
    assert (g, x, y) == expected
    assert a * x + b * y == g


@given(ints, ints)
def test_egcd_bezout(a, b):
    g, x, y = egcd(a, b)
    assert g >= 0
    assert a * x + b * y == g
    if g:
        assert a % g == 0 and b % g == 0
    else:
        assert a == b == 0


def test_modinv():
    assert modinv(3, 7) == 5
    with pytest.raises(ValueError):
        modinv(2, 4)


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b).denominator > 0


@given(rationals)
def test_format_roundtrip(x):
    text = format_rational(x)
    assert "/" in text
    assert parse_rational(text) == x


@pytest.mark.parametrize("text, value", [("3", Fraction(3)), ("-7/5", Fraction(-7, 5)), ("6/4", Fraction(3, 2))])
def test_parse(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", " 1/2", "1/ 2", "+1/2", "1/-2", "", "a/b"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_integers_emitted_with_denominator():
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(0)) == "0/1"
