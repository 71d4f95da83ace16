"""Coordinate charts: the shared context for all tensor components."""

from __future__ import annotations

from fractions import Fraction

from ..ratcas import CoordinateSystem, RationalFunction, parse_expr


class Chart:
    """A coordinate chart of a smooth manifold.

    All bundled content is 3-dimensional, but nothing here hardwires that.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: CoordinateSystem):
        self.coords = coords

    @classmethod
    def of(cls, *names: str) -> "Chart":
        return cls(CoordinateSystem(names))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __eq__(self, other):
        return isinstance(other, Chart) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Chart({list(self.coords.names)!r})"

    # scalar constructors, used pervasively by the tensor layer

    def zero(self) -> RationalFunction:
        return RationalFunction.zero(self.coords)

    def one(self) -> RationalFunction:
        return RationalFunction.one(self.coords)

    def const(self, value) -> RationalFunction:
        return RationalFunction.constant(self.coords, Fraction(value))

    def var(self, name: str) -> RationalFunction:
        return RationalFunction.variable(self.coords, name)

    def expr(self, text: str) -> RationalFunction:
        return parse_expr(text, self.coords)
