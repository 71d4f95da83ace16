"""Ordered coordinate systems used to index polynomial exponents."""

from __future__ import annotations

import re

from ..errors import UnknownCoordinateError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class CoordinateSystem:
    """An ordered tuple of distinct coordinate names.

    The order is fixed and shared by every polynomial exponent vector and
    tensor component array built over it.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("coordinate system must name at least one coordinate")
        if len(set(names)) != len(names):
            raise ValueError(f"coordinate names must be distinct: {names!r}")
        for name in names:
            if not _IDENT.match(name):
                raise ValueError(f"invalid coordinate identifier: {name!r}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, CoordinateSystem) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"CoordinateSystem({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownCoordinateError(
                f"unknown coordinate {name!r}; chart has {list(self.names)}"
            ) from None

    def contains(self, name: str) -> bool:
        return name in self._index
