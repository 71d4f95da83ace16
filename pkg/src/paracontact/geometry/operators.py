"""Lie and exterior calculus, gradient, divergence, Laplacian.

The exterior derivative of a one-form carries a convention factor kappa:

    (d w)(X, Y) = kappa * (X(w(Y)) - Y(w(X)) - w([X, Y]))

kappa is calibrated once against the bundled structures (see
``paracontact.conventions``); the two-form derivative and the wedge use the
plain alternating sums with no extra factor, which together with kappa = 1/2
satisfies both calibration conditions.
"""

from __future__ import annotations

from ..conventions import exterior_kappa
from ..errors import NotAntisymmetricError
from ..ratcas import RationalFunction
from .connection import christoffel, cov_derivative_oneform
from .fields import Metric, OneForm, Tensor02, Tensor11, ThreeForm, VectorField


def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
    """[X, Y]^k = X^i d_i Y^k - Y^i d_i X^k."""
    chart = X.chart
    n = chart.dim
    comps = []
    for k in range(n):
        total = chart.zero()
        for i in range(n):
            total = total + X.components[i] * Y.components[k].partial(i)
            total = total - Y.components[i] * X.components[k].partial(i)
        comps.append(total)
    return VectorField(chart, comps)


def lie_derivative(T, V: VectorField):
    """Lie derivative along V; dispatches on the valence of T."""
    chart = V.chart
    n = chart.dim
    if isinstance(T, RationalFunction):
        return V(T)
    if isinstance(T, VectorField):
        return lie_bracket(V, T)
    if isinstance(T, OneForm):
        comps = []
        for i in range(n):
            total = chart.zero()
            for m in range(n):
                total = total + V.components[m] * T.components[i].partial(m)
                total = total + T.components[m] * V.components[m].partial(i)
            comps.append(total)
        return OneForm(chart, comps)
    if isinstance(T, Metric):
        return lie_derivative(T.as_tensor02(), V)
    if isinstance(T, Tensor02):
        comp = []
        for i in range(n):
            row = []
            for j in range(n):
                total = chart.zero()
                for m in range(n):
                    total = total + V.components[m] * T.comp[i][j].partial(m)
                    total = total + T.comp[m][j] * V.components[m].partial(i)
                    total = total + T.comp[i][m] * V.components[m].partial(j)
                row.append(total)
            comp.append(row)
        return Tensor02(chart, comp)
    if isinstance(T, Tensor11):
        comp = []
        for i in range(n):
            row = []
            for j in range(n):
                total = chart.zero()
                for m in range(n):
                    total = total + V.components[m] * T.comp[i][j].partial(m)
                    total = total - T.comp[m][j] * V.components[i].partial(m)
                    total = total + T.comp[i][m] * V.components[m].partial(j)
                row.append(total)
            comp.append(row)
        return Tensor11(chart, comp)
    raise TypeError(f"unsupported tensor valence: {type(T).__name__}")


def exterior_derivative(omega, kappa=None):
    """d on functions, one-forms (with the kappa factor), and two-forms."""
    if isinstance(omega, RationalFunction):
        chart_dim = len(omega.cs)
        from .chart import Chart

        chart = Chart(omega.cs)
        return OneForm(chart, [omega.partial(i) for i in range(chart_dim)])
    chart = omega.chart
    n = chart.dim
    if isinstance(omega, OneForm):
        if kappa is None:
            kappa = exterior_kappa()
        k = chart.const(kappa)
        comp = [
            [
                k * (omega.components[j].partial(i) - omega.components[i].partial(j))
                for j in range(n)
            ]
            for i in range(n)
        ]
        return Tensor02(chart, comp)
    if isinstance(omega, Tensor02):
        if not omega.is_antisymmetric():
            raise NotAntisymmetricError("exterior derivative needs an antisymmetric (0,2) form")
        if n != 3:
            raise ValueError("two-form exterior derivative implemented for dim 3")
        b = omega.comp
        coeff = b[1][2].partial(0) - b[0][2].partial(1) + b[0][1].partial(2)
        return ThreeForm(chart, coeff)
    raise TypeError(f"unsupported form degree: {type(omega).__name__}")


def wedge(eta: OneForm, phi: Tensor02) -> ThreeForm:
    """(eta ^ phi)(X,Y,Z) by the alternating shuffle sum, no 1/k! factors."""
    if not phi.is_antisymmetric():
        raise NotAntisymmetricError("wedge expects an antisymmetric (0,2) form")
    chart = eta.chart
    if chart.dim != 3:
        raise ValueError("wedge of a 1-form and 2-form implemented for dim 3")
    e = eta.components
    b = phi.comp
    coeff = e[0] * b[1][2] - e[1] * b[0][2] + e[2] * b[0][1]
    return ThreeForm(chart, coeff)


def gradient(f: RationalFunction, g: Metric) -> VectorField:
    """(Df)^k = g^{kj} d_j f."""
    chart = g.chart
    n = chart.dim
    inv = g.inverse
    df = [f.partial(j) for j in range(n)]
    return VectorField(
        chart,
        [sum((inv[k][j] * df[j] for j in range(n)), chart.zero()) for k in range(n)],
    )


def divergence(X: VectorField, g: Metric) -> RationalFunction:
    """div X = d_i X^i + Gamma^i_{ik} X^k."""
    chart = g.chart
    n = chart.dim
    gam = christoffel(g).gamma
    total = chart.zero()
    for i in range(n):
        total = total + X.components[i].partial(i)
        for k in range(n):
            total = total + gam[i][i][k] * X.components[k]
    return total


def laplacian(f: RationalFunction, g: Metric) -> RationalFunction:
    """Delta f = -div(Df); note the minus-sign convention."""
    return -divergence(gradient(f, g), g)


def hessian(f: RationalFunction, g: Metric) -> Tensor02:
    """Hess(f)(X, Y) = g(nabla_X Df, Y) = (nabla df)_{ij}; symmetric."""
    chart = g.chart
    df = OneForm(chart, [f.partial(j) for j in range(chart.dim)])
    return cov_derivative_oneform(df, g)
