"""Exact multivariate rational functions in canonical form.

A value is a quotient num/den of integer-coefficient polynomials with

* poly gcd(num, den) = 1,
* gcd(content(num), content(den)) = 1,
* positive graded-lex leading coefficient of den,

which makes the representation unique: structural equality coincides with
mathematical equality, and ``is_zero`` is a plain emptiness test.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import PoleError, ZeroDenominatorError
from .coordinates import CoordinateSystem
from .polynomial import Polynomial, Rational, divexact, poly_gcd


class RationalFunction:
    """An element of Q(x1, ..., xn), always stored in canonical form."""

    __slots__ = ("cs", "num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if num.cs != den.cs:
            raise ValueError("numerator and denominator over different coordinates")
        if den.is_zero():
            raise ZeroDenominatorError("denominator is the zero polynomial")
        cs = num.cs
        if num.is_zero():
            num = Polynomial.zero(cs)
            den = Polynomial.one(cs)
        else:
            g = poly_gcd(num, den)
            num = divexact(num, g)
            den = divexact(den, g)
            sign = 1 if (num.leading_term()[1] > 0) == (den.leading_term()[1] > 0) else -1
            scale = num.rational_content() / den.rational_content()
            num = num.primitive_normalized().scale(sign * scale.numerator)
            den = den.primitive_normalized().scale(scale.denominator)
        self.cs = cs
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.one(p.cs))

    @classmethod
    def constant(cls, cs: CoordinateSystem, value) -> "RationalFunction":
        return cls.from_polynomial(Polynomial.constant(cs, value))

    @classmethod
    def zero(cls, cs):
        return cls.from_polynomial(Polynomial.zero(cs))

    @classmethod
    def one(cls, cs):
        return cls.constant(cs, 1)

    @classmethod
    def variable(cls, cs, name: str) -> "RationalFunction":
        return cls.from_polynomial(Polynomial.variable(cs, name))

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    # -- field arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.cs != self.cs:
                raise ValueError("operands over different coordinate systems")
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.cs, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        out = object.__new__(RationalFunction)
        out.cs = self.cs
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominatorError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n == 0:
            return RationalFunction.one(self.cs)
        if n < 0:
            if self.is_zero():
                raise ZeroDenominatorError("zero raised to a negative power")
            return RationalFunction(self.den**(-n), self.num**(-n))
        return RationalFunction(self.num**n, self.den**n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(self.cs, other)
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    # -- calculus --------------------------------------------------------------

    def partial(self, coord) -> "RationalFunction":
        """Quotient-rule partial derivative; coord is a name or an index."""
        var = coord if isinstance(coord, int) else self.cs.index(coord)
        return RationalFunction(
            self.num.partial(var) * self.den - self.num * self.den.partial(var),
            self.den * self.den,
        )

    def evaluate(self, point) -> Fraction:
        """Exact value at a map coordinate-name -> Fraction; PoleError at poles."""
        den = self.den.evaluate(point)
        if den == 0:
            raise PoleError(f"denominator {self.den} vanishes at {dict(point)!r}")
        return self.num.evaluate(point) / den

    # -- printing ------------------------------------------------------------------

    def __str__(self):
        if self.den == Polynomial.one(self.cs):
            return str(self.num)
        num_str = str(self.num)
        if len(self.num.terms) > 1:
            num_str = f"({num_str})"
        den_str = str(self.den)
        if not self._den_is_atomic():
            den_str = f"({den_str})"
        return f"{num_str}/{den_str}"

    def _den_is_atomic(self) -> bool:
        # safe to print after '/' without parentheses: a bare integer, or a
        # single power of a single variable with unit coefficient
        if len(self.den.terms) != 1:
            return False
        (exps, coeff), = self.den.terms.items()
        if sum(exps) == 0:
            return True
        return coeff == 1 and sum(1 for e in exps if e) == 1

    def __repr__(self):
        return f"RationalFunction({self})"


def as_rational_function(value, cs) -> RationalFunction:
    """Coerce ints, Fractions, Polynomials, or expression strings."""
    if isinstance(value, RationalFunction):
        if value.cs != cs:
            raise ValueError("rational function over a different coordinate system")
        return value
    if isinstance(value, Polynomial):
        return RationalFunction.from_polynomial(value)
    if isinstance(value, (int, Fraction)):
        return RationalFunction.constant(cs, value)
    if isinstance(value, str):
        from .parser import parse_expr

        return parse_expr(value, cs)
    raise TypeError(f"cannot interpret {value!r} as a rational function")


__all__ = [
    "Rational",
    "RationalFunction",
    "as_rational_function",
]
