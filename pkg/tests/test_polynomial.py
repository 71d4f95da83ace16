"""Polynomial ring basics: arithmetic, ordering, content, gcd, exact division."""

from fractions import Fraction

import pytest

from paracontact.ratcas import CoordinateSystem, Polynomial
from paracontact.ratcas.polynomial import divexact, poly_gcd

CS = CoordinateSystem(["x", "y", "z"])

X = Polynomial.variable(CS, "x")
Y = Polynomial.variable(CS, "y")
Z = Polynomial.variable(CS, "z")
ONE = Polynomial.one(CS)


def test_zero_coefficients_dropped():
    p = Polynomial(CS, {(1, 0, 0): Fraction(0), (0, 1, 0): Fraction(2)})
    assert p.terms == {(0, 1, 0): Fraction(2)}


def test_addition_cancels():
    assert (X - X).is_zero()
    assert X + Y == Y + X


def test_multiplication():
    assert (X + Y) * (X - Y) == X * X - Y * Y


def test_power():
    assert (X + ONE) ** 3 == X**3 + 3 * X**2 + 3 * X + ONE
    with pytest.raises(ValueError):
        X ** (-1)


def test_graded_lex_leading_term():
    p = X * Y + Z**3 + X
    exps, coeff = p.leading_term()
    assert exps == (0, 0, 3)  # degree 3 beats degree 2
    q = X * Y + X * Z
    assert q.leading_term()[0] == (1, 1, 0)  # same degree: y beats z lexically


def test_partial_derivative():
    p = X**2 * Y + 3 * Z
    assert p.partial(0) == 2 * X * Y
    assert p.partial(1) == X**2
    assert p.partial(2) == Polynomial.constant(CS, 3)


def test_evaluate():
    p = X**2 - Y
    assert p.evaluate({"x": 2, "y": 1, "z": 0}) == 3


def test_rational_content():
    p = Polynomial(CS, {(1, 0, 0): Fraction(2, 3), (0, 1, 0): Fraction(4, 3)})
    assert p.rational_content() == Fraction(2, 3)
    assert p.primitive_normalized() == X + 2 * Y


def test_divexact():
    product = (X + Y) * (X - Z) * 6
    assert divexact(product, X + Y) == (X - Z) * 6
    with pytest.raises(ValueError):
        divexact(X + ONE, Y)


def test_gcd_univariate():
    f = (X + ONE) ** 2 * (X - ONE)
    g = (X + ONE) * (X + 3)
    assert poly_gcd(f, g) == X + ONE


def test_gcd_multivariate():
    common = X * Y - Z**2
    f = common * (X + Y)
    g = common * (Y + Z) * 2
    assert poly_gcd(f, g) == common


def test_gcd_coprime_and_constants():
    assert poly_gcd(X + ONE, Y + ONE) == ONE
    assert poly_gcd(Polynomial.constant(CS, 6), Polynomial.constant(CS, 4)) == ONE
    assert poly_gcd(Polynomial.zero(CS), X * 2) == X


def test_gcd_normalization_sign():
    # gcd is primitive-integer with positive leading coefficient
    f = (-X + Y) * (X + Y)
    g = (-X + Y) * Z
    assert poly_gcd(f, g) == X - Y


def test_printing_graded_lex_descending():
    p = X + X**2 * Y - 3 * Z + ONE
    assert str(p) == "x^2*y + x - 3*z + 1"
    assert str(Polynomial.zero(CS)) == "0"
    assert str(-X) == "-x"
