"""Expression grammar: literals, precedence, errors with positions."""

import pytest

from paracontact.errors import ParseError
from paracontact.ratcas import CoordinateSystem, parse_expr

CS = CoordinateSystem(["x", "y", "z"])


def rf(text):
    return parse_expr(text, CS)


def test_literals():
    assert str(rf("3")) == "3"
    assert str(rf("-1/2")) == "-1/2"
    assert str(rf("(1+4*y^2)/z^2")) == "(4*y^2 + 1)/z^2"


def test_whitespace_insensitive():
    assert rf(" x +\t2*y ") == rf("x+2*y")


def test_cancellation_to_zero():
    assert rf("x - x").is_zero()


def test_unary_minus_binds_below_power():
    assert rf("-x^2") == rf("0 - x^2")
    assert rf("- - x") == rf("x")


def test_power_negative_exponent():
    assert rf("z^-2") == rf("1/z^2")
    assert rf("z^(-2)") == rf("1/z^2")
    assert rf("2^-2") == rf("1/4")


def test_division_left_associative():
    assert rf("x/y/z") == rf("x/(y*z)")
    assert rf("8/2/2") == rf("2")


def test_syntax_error_position():
    with pytest.raises(ParseError) as err:
        rf("x+")
    assert err.value.position == 2
    with pytest.raises(ParseError) as err:
        rf("x + $")
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        rf("(x + 1")
    assert err.value.position == 6


def test_unknown_identifier():
    with pytest.raises(ParseError) as err:
        rf("x + w")
    assert "w" in str(err.value)
    assert err.value.position == 4


def test_division_by_zero_expression():
    with pytest.raises(ParseError):
        rf("1/(x-x)")
    with pytest.raises(ParseError):
        rf("(x-x)^-1")


def test_double_caret_rejected():
    with pytest.raises(ParseError):
        rf("x^2^3")


def test_float_like_input_rejected():
    with pytest.raises(ParseError):
        rf("1.5")
