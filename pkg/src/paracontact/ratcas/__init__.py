"""Exact arithmetic kernel: multivariate rational functions over Q.

Provides the scalar type used by every tensor component in the package,
together with an expression parser and canonical printer.  No floating
point anywhere; coefficients are unbounded Fractions.
"""

from .coordinates import CoordinateSystem
from .parser import parse_expr
from .polynomial import Polynomial, Rational
from .ratfunc import RationalFunction, as_rational_function

__all__ = [
    "CoordinateSystem",
    "Polynomial",
    "Rational",
    "RationalFunction",
    "as_rational_function",
    "parse_expr",
]
