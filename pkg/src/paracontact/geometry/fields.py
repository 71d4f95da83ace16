"""Tensor fields on a chart: coordinate-component arrays of rational functions.

Index conventions used throughout the package:

* ``VectorField.components[i]``  — contravariant components V^i
* ``OneForm.components[i]``      — covariant components w_i
* ``Tensor11.comp[i][j]``        — A^i_j (row = upper index)
* ``Tensor02.comp[i][j]``        — T(d_i, d_j)
* ``Metric.comp[i][j]``          — g_ij, symmetric, det != 0
* ``ThreeForm.coeff``            — coefficient of dx^1 ^ dx^2 ^ dx^3

Everything is immutable after construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegenerateFrameError, DegenerateMetricError
from ..ratcas import RationalFunction, as_rational_function
from .chart import Chart


def _coerce_components(chart, values, expected):
    values = tuple(as_rational_function(v, chart.coords) for v in values)
    if len(values) != expected:
        raise ValueError(f"expected {expected} components, got {len(values)}")
    return values


def _coerce_matrix(chart, rows):
    rows = tuple(_coerce_components(chart, row, chart.dim) for row in rows)
    if len(rows) != chart.dim:
        raise ValueError(f"expected {chart.dim} rows, got {len(rows)}")
    return rows


class VectorField:
    """A contravariant vector field; acts on functions as a derivation."""

    __slots__ = ("chart", "components")

    def __init__(self, chart: Chart, components):
        self.chart = chart
        self.components = _coerce_components(chart, components, chart.dim)

    @classmethod
    def zero(cls, chart):
        return cls(chart, [chart.zero()] * chart.dim)

    @classmethod
    def coordinate(cls, chart, k: int) -> "VectorField":
        comps = [chart.zero()] * chart.dim
        comps[k] = chart.one()
        return cls(chart, comps)

    def __call__(self, f: RationalFunction) -> RationalFunction:
        total = self.chart.zero()
        for i, comp in enumerate(self.components):
            total = total + comp * f.partial(i)
        return total

    def __add__(self, other):
        return VectorField(
            self.chart, [a + b for a, b in zip(self.components, other.components)]
        )

    def __sub__(self, other):
        return VectorField(
            self.chart, [a - b for a, b in zip(self.components, other.components)]
        )

    def __neg__(self):
        return VectorField(self.chart, [-a for a in self.components])

    def scale(self, f) -> "VectorField":
        f = as_rational_function(f, self.chart.coords)
        return VectorField(self.chart, [f * a for a in self.components])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        return (
            isinstance(other, VectorField)
            and self.chart == other.chart
            and self.components == other.components
        )

    def __repr__(self):
        return f"VectorField({[str(c) for c in self.components]})"


class OneForm:
    """A covariant vector field."""

    __slots__ = ("chart", "components")

    def __init__(self, chart: Chart, components):
        self.chart = chart
        self.components = _coerce_components(chart, components, chart.dim)

    @classmethod
    def zero(cls, chart):
        return cls(chart, [chart.zero()] * chart.dim)

    def __call__(self, X: VectorField) -> RationalFunction:
        total = self.chart.zero()
        for w, v in zip(self.components, X.components):
            total = total + w * v
        return total

    def __add__(self, other):
        return OneForm(
            self.chart, [a + b for a, b in zip(self.components, other.components)]
        )

    def __sub__(self, other):
        return OneForm(
            self.chart, [a - b for a, b in zip(self.components, other.components)]
        )

    def __neg__(self):
        return OneForm(self.chart, [-a for a in self.components])

    def scale(self, f) -> "OneForm":
        f = as_rational_function(f, self.chart.coords)
        return OneForm(self.chart, [f * a for a in self.components])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        return (
            isinstance(other, OneForm)
            and self.chart == other.chart
            and self.components == other.components
        )

    def __repr__(self):
        return f"OneForm({[str(c) for c in self.components]})"


class Tensor11:
    """A (1,1)-tensor field, stored as a matrix with the upper index as row."""

    __slots__ = ("chart", "comp")

    def __init__(self, chart: Chart, comp):
        self.chart = chart
        self.comp = _coerce_matrix(chart, comp)

    @classmethod
    def zero(cls, chart):
        z = chart.zero()
        return cls(chart, [[z] * chart.dim for _ in range(chart.dim)])

    @classmethod
    def identity(cls, chart):
        return cls(
            chart,
            [
                [chart.one() if i == j else chart.zero() for j in range(chart.dim)]
                for i in range(chart.dim)
            ],
        )

    @classmethod
    def outer(cls, X: VectorField, w: OneForm) -> "Tensor11":
        """X (x) w, i.e. the operator Y -> w(Y) X."""
        chart = X.chart
        return cls(chart, [[X.components[i] * w.components[j] for j in range(chart.dim)] for i in range(chart.dim)])

    def __call__(self, X: VectorField) -> VectorField:
        n = self.chart.dim
        return VectorField(
            self.chart,
            [
                sum((self.comp[i][j] * X.components[j] for j in range(n)), self.chart.zero())
                for i in range(n)
            ],
        )

    def column(self, j: int) -> VectorField:
        """The image of the j-th coordinate field."""
        return VectorField(self.chart, [self.comp[i][j] for i in range(self.chart.dim)])

    def compose(self, other: "Tensor11") -> "Tensor11":
        """Operator composition self ∘ other (matrix product)."""
        n = self.chart.dim
        return Tensor11(
            self.chart,
            [
                [
                    sum((self.comp[i][k] * other.comp[k][j] for k in range(n)), self.chart.zero())
                    for j in range(n)
                ]
                for i in range(n)
            ],
        )

    def trace(self) -> RationalFunction:
        return sum((self.comp[i][i] for i in range(self.chart.dim)), self.chart.zero())

    def __add__(self, other):
        return Tensor11(
            self.chart,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.comp, other.comp)],
        )

    def __sub__(self, other):
        return Tensor11(
            self.chart,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.comp, other.comp)],
        )

    def __neg__(self):
        return Tensor11(self.chart, [[-a for a in row] for row in self.comp])

    def scale(self, f) -> "Tensor11":
        f = as_rational_function(f, self.chart.coords)
        return Tensor11(self.chart, [[f * a for a in row] for row in self.comp])

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.comp for a in row)

    def __eq__(self, other):
        return (
            isinstance(other, Tensor11)
            and self.chart == other.chart
            and self.comp == other.comp
        )

    def __repr__(self):
        return f"Tensor11({[[str(a) for a in row] for row in self.comp]})"


class Tensor02:
    """A (0,2)-tensor field T(d_i, d_j) = comp[i][j]."""

    __slots__ = ("chart", "comp")

    def __init__(self, chart: Chart, comp):
        self.chart = chart
        self.comp = _coerce_matrix(chart, comp)

    @classmethod
    def zero(cls, chart):
        z = chart.zero()
        return cls(chart, [[z] * chart.dim for _ in range(chart.dim)])

    @classmethod
    def outer(cls, a: OneForm, b: OneForm) -> "Tensor02":
        chart = a.chart
        return cls(
            chart,
            [
                [a.components[i] * b.components[j] for j in range(chart.dim)]
                for i in range(chart.dim)
            ],
        )

    def __call__(self, X: VectorField, Y: VectorField) -> RationalFunction:
        n = self.chart.dim
        total = self.chart.zero()
        for i in range(n):
            for j in range(n):
                total = total + self.comp[i][j] * X.components[i] * Y.components[j]
        return total

    def is_symmetric(self) -> bool:
        n = self.chart.dim
        return all(
            self.comp[i][j] == self.comp[j][i] for i in range(n) for j in range(i + 1, n)
        )

    def is_antisymmetric(self) -> bool:
        n = self.chart.dim
        return all(
            (self.comp[i][j] + self.comp[j][i]).is_zero() for i in range(n) for j in range(i, n)
        )

    def __add__(self, other):
        return Tensor02(
            self.chart,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.comp, other.comp)],
        )

    def __sub__(self, other):
        return Tensor02(
            self.chart,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.comp, other.comp)],
        )

    def __neg__(self):
        return Tensor02(self.chart, [[-a for a in row] for row in self.comp])

    def scale(self, f) -> "Tensor02":
        f = as_rational_function(f, self.chart.coords)
        return Tensor02(self.chart, [[f * a for a in row] for row in self.comp])

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.comp for a in row)

    def __eq__(self, other):
        return (
            isinstance(other, Tensor02)
            and self.chart == other.chart
            and self.comp == other.comp
        )

    def __repr__(self):
        return f"Tensor02({[[str(a) for a in row] for row in self.comp]})"


class ThreeForm:
    """A 3-form on a 3-dimensional chart, by its single coefficient."""

    __slots__ = ("chart", "coeff")

    def __init__(self, chart: Chart, coeff):
        if chart.dim != 3:
            raise ValueError("ThreeForm requires a 3-dimensional chart")
        self.chart = chart
        self.coeff = as_rational_function(coeff, chart.coords)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __add__(self, other):
        return ThreeForm(self.chart, self.coeff + other.coeff)

    def __sub__(self, other):
        return ThreeForm(self.chart, self.coeff - other.coeff)

    def scale(self, f) -> "ThreeForm":
        return ThreeForm(self.chart, self.coeff * as_rational_function(f, self.chart.coords))

    def __eq__(self, other):
        return isinstance(other, ThreeForm) and self.coeff == other.coeff

    def __repr__(self):
        return f"ThreeForm({self.coeff})"


class Metric:
    """A nondegenerate symmetric (0,2)-tensor with cached inverse and det."""

    __slots__ = ("chart", "comp", "_det", "_inverse", "_christoffel", "_riemann", "_ricci")

    def __init__(self, chart: Chart, comp):
        self.chart = chart
        comp = _coerce_matrix(chart, comp)
        n = chart.dim
        for i in range(n):
            for j in range(i + 1, n):
                if comp[i][j] != comp[j][i]:
                    raise ValueError(f"metric not symmetric at ({i},{j})")
        self.comp = comp
        from .linalg import determinant

        self._det = determinant(comp, chart)
        if self._det.is_zero():
            raise DegenerateMetricError("metric determinant is identically zero")
        self._inverse = None
        self._christoffel = None
        self._riemann = None
        self._ricci = None

    @property
    def det(self) -> RationalFunction:
        return self._det

    @property
    def inverse(self):
        """Inverse component matrix g^{ij} (tuple of tuples)."""
        if self._inverse is None:
            from .linalg import inverse_matrix

            self._inverse = inverse_matrix(self.comp, self.chart, self._det)
        return self._inverse

    def as_tensor02(self) -> Tensor02:
        return Tensor02(self.chart, self.comp)

    def __call__(self, X: VectorField, Y: VectorField) -> RationalFunction:
        return self.as_tensor02()(X, Y)

    def lower(self, X: VectorField) -> OneForm:
        """Musical flat: (X^flat)_i = g_ij X^j."""
        n = self.chart.dim
        return OneForm(
            self.chart,
            [
                sum((self.comp[i][j] * X.components[j] for j in range(n)), self.chart.zero())
                for i in range(n)
            ],
        )

    def raise_form(self, w: OneForm) -> VectorField:
        """Musical sharp: (w^sharp)^i = g^{ij} w_j."""
        n = self.chart.dim
        inv = self.inverse
        return VectorField(
            self.chart,
            [
                sum((inv[i][j] * w.components[j] for j in range(n)), self.chart.zero())
                for i in range(n)
            ],
        )

    def __eq__(self, other):
        return isinstance(other, Metric) and self.chart == other.chart and self.comp == other.comp

    def __repr__(self):
        return f"Metric({[[str(a) for a in row] for row in self.comp]})"


class Frame:
    """An ordered family of generically independent vector fields.

    ``signs`` optionally records declared pseudo-orthonormal signs (+1/-1),
    used by frame-orthonormality diagnostics and metric reconstruction.
    """

    __slots__ = ("chart", "vectors", "names", "signs")

    def __init__(self, chart: Chart, vectors, names=None, signs=None):
        vectors = tuple(vectors)
        if len(vectors) != chart.dim:
            raise ValueError(f"frame needs {chart.dim} vector fields")
        self.chart = chart
        self.vectors = vectors
        if names is None:
            names = tuple(f"e{i + 1}" for i in range(chart.dim))
        else:
            names = tuple(names)
            if len(names) != chart.dim:
                raise ValueError("one name per frame vector required")
        self.names = names
        if signs is not None:
            signs = tuple(signs)
            if len(signs) != chart.dim or any(s not in (1, -1) for s in signs):
                raise ValueError("signs must be +1/-1, one per frame vector")
        self.signs = signs
        from .linalg import determinant

        if determinant(self.component_matrix(), chart).is_zero():
            raise DegenerateFrameError("frame component matrix has det identically 0")

    def component_matrix(self):
        """Matrix with E[i][a] = component i of frame vector a (columns = vectors)."""
        n = self.chart.dim
        return tuple(
            tuple(self.vectors[a].components[i] for a in range(n)) for i in range(n)
        )

    def __repr__(self):
        return f"Frame(names={self.names})"
