"""Riemann curvature, Ricci tensor and operator, scalar curvature.

Sign convention: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
- nabla_[X,Y] Z, so that on coordinate fields

    R^l_{ijk} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
                + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik}

with R(d_i, d_j) d_k = R^l_{ijk} d_l.  The Ricci contraction slot
(S_jk = R^i_{ijk}) is validated against the bundled fixtures.
"""

from __future__ import annotations

from .connection import christoffel, cov_derivative_tensor11
from .fields import Metric, OneForm, Tensor02, Tensor11, VectorField


class RiemannTensor:
    """Curvature components comp[l][i][j][k] = R^l_{ijk}."""

    __slots__ = ("chart", "comp")

    def __init__(self, chart, comp):
        self.chart = chart
        self.comp = comp

    def __getitem__(self, lijk):
        l, i, j, k = lijk
        return self.comp[l][i][j][k]

    def apply(self, X: VectorField, Y: VectorField, Z: VectorField) -> VectorField:
        """R(X,Y)Z as a vector field."""
        chart = self.chart
        n = chart.dim
        out = []
        for l in range(n):
            total = chart.zero()
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        total = total + (
                            self.comp[l][i][j][k]
                            * X.components[i]
                            * Y.components[j]
                            * Z.components[k]
                        )
            out.append(total)
        return VectorField(chart, out)

    def lowered(self, g: Metric):
        """R_{lijk} = g_{lm} R^m_{ijk} as nested tuples [l][i][j][k]."""
        chart = self.chart
        n = chart.dim
        out = []
        for l in range(n):
            cube = []
            for i in range(n):
                plane = []
                for j in range(n):
                    row = []
                    for k in range(n):
                        total = chart.zero()
                        for m in range(n):
                            total = total + g.comp[l][m] * self.comp[m][i][j][k]
                        row.append(total)
                    plane.append(tuple(row))
                cube.append(tuple(plane))
            out.append(tuple(cube))
        return tuple(out)


def riemann(g: Metric) -> RiemannTensor:
    if g._riemann is not None:
        return g._riemann
    chart = g.chart
    n = chart.dim
    gam = christoffel(g).gamma
    dgam = [
        [[[gam[l][j][k].partial(i) for k in range(n)] for j in range(n)] for l in range(n)]
        for i in range(n)
    ]
    comp = []
    for l in range(n):
        cube = []
        for i in range(n):
            plane = []
            for j in range(n):
                row = []
                for k in range(n):
                    total = dgam[i][l][j][k] - dgam[j][l][i][k]
                    for m in range(n):
                        total = total + gam[l][i][m] * gam[m][j][k]
                        total = total - gam[l][j][m] * gam[m][i][k]
                    row.append(total)
                plane.append(tuple(row))
            cube.append(tuple(plane))
        comp.append(tuple(cube))
    result = RiemannTensor(chart, tuple(comp))
    g._riemann = result
    return result


def ricci(g: Metric) -> Tensor02:
    """S_jk = R^i_{ijk} (trace over the first curvature argument)."""
    if g._ricci is not None:
        return g._ricci
    chart = g.chart
    n = chart.dim
    R = riemann(g).comp
    comp = []
    for j in range(n):
        row = []
        for k in range(n):
            total = chart.zero()
            for i in range(n):
                total = total + R[i][i][j][k]
            row.append(total)
        comp.append(row)
    result = Tensor02(chart, comp)
    g._ricci = result
    return result


def ricci_operator(g: Metric) -> Tensor11:
    """Q with g(QX, Y) = S(X, Y), i.e. Q^i_j = g^{ik} S_kj."""
    chart = g.chart
    n = chart.dim
    S = ricci(g)
    inv = g.inverse
    comp = []
    for i in range(n):
        row = []
        for j in range(n):
            total = chart.zero()
            for k in range(n):
                total = total + inv[i][k] * S.comp[k][j]
            row.append(total)
        comp.append(row)
    return Tensor11(chart, comp)


def scalar_curvature(g: Metric):
    """r = trace of the Ricci operator."""
    return ricci_operator(g).trace()


def contracted_bianchi_residual(g: Metric) -> OneForm:
    """trace{Y -> (nabla_Y Q)X} - 1/2 nabla_X r, identically zero for any metric."""
    chart = g.chart
    n = chart.dim
    nabla_q = cov_derivative_tensor11(ricci_operator(g), g)
    r = scalar_curvature(g)
    comps = []
    for j in range(n):
        total = chart.zero()
        for k in range(n):
            total = total + nabla_q[k][k][j]
        comps.append(total - r.partial(j) / 2)
    return OneForm(chart, comps)
