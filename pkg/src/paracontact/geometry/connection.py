"""Levi-Civita connection: Christoffel symbols and covariant derivatives."""

from __future__ import annotations

from .fields import Metric, OneForm, Tensor02, Tensor11, VectorField


class Christoffel:
    """Christoffel symbols Gamma^k_{ij} of a metric, symmetric in i, j."""

    __slots__ = ("chart", "gamma")

    def __init__(self, chart, gamma):
        self.chart = chart
        self.gamma = gamma

    def __getitem__(self, kij):
        k, i, j = kij
        return self.gamma[k][i][j]


def christoffel(g: Metric) -> Christoffel:
    """Gamma^k_{ij} = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)."""
    if g._christoffel is not None:
        return g._christoffel
    chart = g.chart
    n = chart.dim
    inv = g.inverse
    dg = [[[g.comp[i][j].partial(k) for j in range(n)] for i in range(n)] for k in range(n)]
    gamma = []
    for k in range(n):
        plane = []
        for i in range(n):
            row = []
            for j in range(n):
                total = chart.zero()
                for l in range(n):
                    total = total + inv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j])
                row.append(total / 2)
            plane.append(tuple(row))
        gamma.append(tuple(plane))
    result = Christoffel(chart, tuple(gamma))
    g._christoffel = result
    return result


def cov_derivative_vector(V: VectorField, g: Metric) -> Tensor11:
    """(nabla V) with comp[k][i] = nabla_i V^k."""
    chart = g.chart
    n = chart.dim
    gam = christoffel(g).gamma
    comp = []
    for k in range(n):
        row = []
        for i in range(n):
            total = V.components[k].partial(i)
            for m in range(n):
                total = total + gam[k][i][m] * V.components[m]
            row.append(total)
        comp.append(row)
    return Tensor11(chart, comp)


def cov_derivative_oneform(w: OneForm, g: Metric) -> Tensor02:
    """(nabla w) with comp[i][j] = nabla_i w_j."""
    chart = g.chart
    n = chart.dim
    gam = christoffel(g).gamma
    comp = []
    for i in range(n):
        row = []
        for j in range(n):
            total = w.components[j].partial(i)
            for m in range(n):
                total = total - gam[m][i][j] * w.components[m]
            row.append(total)
        comp.append(row)
    return Tensor02(chart, comp)


def cov_derivative_tensor02(T: Tensor02, g: Metric):
    """(nabla T) as nested tuples [k][i][j] = nabla_k T_ij."""
    chart = g.chart
    n = chart.dim
    gam = christoffel(g).gamma
    out = []
    for k in range(n):
        plane = []
        for i in range(n):
            row = []
            for j in range(n):
                total = T.comp[i][j].partial(k)
                for m in range(n):
                    total = total - gam[m][k][i] * T.comp[m][j]
                    total = total - gam[m][k][j] * T.comp[i][m]
                row.append(total)
            plane.append(tuple(row))
        out.append(tuple(plane))
    return tuple(out)


def cov_derivative_tensor11(A: Tensor11, g: Metric):
    """(nabla A) as nested tuples [k][i][j] = (nabla_k A)^i_j."""
    chart = g.chart
    n = chart.dim
    gam = christoffel(g).gamma
    out = []
    for k in range(n):
        plane = []
        for i in range(n):
            row = []
            for j in range(n):
                total = A.comp[i][j].partial(k)
                for m in range(n):
                    total = total + gam[i][k][m] * A.comp[m][j]
                    total = total - gam[m][k][j] * A.comp[i][m]
                row.append(total)
            plane.append(tuple(row))
        out.append(tuple(plane))
    return tuple(out)


def covariant_derivative(T, g: Metric):
    """Dispatch on valence; returns the tensor with one extra covariant index."""
    from ..ratcas import RationalFunction

    if isinstance(T, RationalFunction):
        return OneForm(g.chart, [T.partial(i) for i in range(g.chart.dim)])
    if isinstance(T, VectorField):
        return cov_derivative_vector(T, g)
    if isinstance(T, OneForm):
        return cov_derivative_oneform(T, g)
    if isinstance(T, Metric):
        return cov_derivative_tensor02(T.as_tensor02(), g)
    if isinstance(T, Tensor02):
        return cov_derivative_tensor02(T, g)
    if isinstance(T, Tensor11):
        return cov_derivative_tensor11(T, g)
    raise TypeError(f"unsupported tensor valence: {type(T).__name__}")


def cov_along(X: VectorField, V: VectorField, g: Metric) -> VectorField:
    """Directional derivative nabla_X V."""
    nabla = cov_derivative_vector(V, g)
    chart = g.chart
    n = chart.dim
    return VectorField(
        chart,
        [
            sum((X.components[i] * nabla.comp[k][i] for i in range(n)), chart.zero())
            for k in range(n)
        ],
    )
