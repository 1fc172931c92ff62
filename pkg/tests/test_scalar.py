from fractions import Fraction

import pytest
from hypothesis import given

from formalgeom.errors import ParseError
from formalgeom.scalar import I, ONE, ZERO, Scalar, parse_rational, parse_scalar

from conftest import scalars


def test_basic_arithmetic():
    z = Scalar(Fraction(1, 2), 3)
    assert z * I == Scalar(-3, Fraction(1, 2))
    assert I * I == -ONE
    assert (z - z) == ZERO
    assert z.conjugate() == Scalar(Fraction(1, 2), -3)
    assert z.abs2() == Fraction(37, 4)
    assert Scalar(2) == 2 and Scalar(Fraction(1, 3)) == Fraction(1, 3)


def test_exact_str():
    assert Scalar(Fraction(-1, 2), Fraction(-3, 4)).exact_str() == "-1/2 - 3/4 i"
    assert Scalar(2).exact_str(spaced=False) == "2/1+0/1i"
    assert str(Scalar(0, -1)) == "-i"


@pytest.mark.parametrize("text, value", [
    ("3", Scalar(3)),
    ("-4/6", Scalar(Fraction(-2, 3))),
    ("1/2+3/4i", Scalar(Fraction(1, 2), Fraction(3, 4))),
    ("1/2 - 3/4 i", Scalar(Fraction(1, 2), Fraction(-3, 4))),
    ("i", I),
    ("-2i", Scalar(0, -2)),
    ("1+-1i", Scalar(1, -1)),
    ("0/1+1/1i", I),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "abc", "1.5", "1/2+3/4j"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_parse_rational_unreduced():
    assert parse_rational("6/8") == Fraction(3, 4)
    with pytest.raises(ParseError):
        parse_rational("1/2+i")


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b:
        assert (a / b) * b == a


@given(scalars)
def test_round_trip(z):
    assert parse_scalar(z.exact_str()) == z
    assert parse_scalar(z.exact_str(spaced=False)) == z
    assert parse_scalar(str(z)) == z
