"""Tensor calculus: connection, curvature, Lie/exterior calculus, frames.

Expected frame-table values below are the published connection and curvature
tables of the two bundled examples; everything else is checked against
independent identities (metricity, Bianchi, Killing operator, d o d = 0).
"""

import random

import pytest

from paracontact.errors import DegenerateMetricError, PoleError
from paracontact.geometry import (
    Chart,
    Frame,
    Metric,
    OneForm,
    Tensor02,
    VectorField,
    christoffel,
    contracted_bianchi_residual,
    cov_along,
    cov_derivative_tensor02,
    cov_derivative_vector,
    covariant_derivative,
    divergence,
    exterior_derivative,
    express_in_frame,
    gradient,
    laplacian,
    lie_bracket,
    lie_derivative,
    ricci,
    riemann,
    scalar_curvature,
    signature_at,
    wedge,
)
from conftest import random_polynomial, random_vector_field

CHART = Chart.of("x", "y", "z")


def metrics(ex1, ex2, flat):
    return {"ex1": ex1.structure.g, "ex2": ex2.structure.g, "flat": flat.structure.g}


# ---------------------------------------------------------------------------
# connection
# ---------------------------------------------------------------------------


def test_flat_christoffel_vanishes(flat):
    gam = christoffel(flat.structure.g).gamma
    assert all(v.is_zero() for plane in gam for row in plane for v in row)


def test_christoffel_symmetric(ex1, ex2, flat):
    for g in metrics(ex1, ex2, flat).values():
        gam = christoffel(g).gamma
        n = g.chart.dim
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    assert gam[k][i][j] == gam[k][j][i]


def test_metricity(ex1, ex2, flat):
    for g in metrics(ex1, ex2, flat).values():
        nabla_g = cov_derivative_tensor02(g.as_tensor02(), g)
        assert all(v.is_zero() for plane in nabla_g for row in plane for v in row)


def test_degenerate_metric_rejected():
    with pytest.raises(DegenerateMetricError):
        Metric(CHART, [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "1"]])


EX1_CONNECTION = {
    # (direction, argument) -> frame coefficients of nabla_{F_dir} F_arg
    (0, 0): (0, 0, 0),
    (1, 0): (0, 0, 1),
    (2, 0): (0, -1, 0),
    (0, 1): (0, 0, -1),
    (1, 1): (0, 0, 0),
    (2, 1): (-1, 0, 0),
    (0, 2): (0, -1, 0),
    (1, 2): (-1, 0, 0),
    (2, 2): (0, 0, 0),
}


def test_ex1_frame_connection_table(ex1):
    g = ex1.structure.g
    frame = ex1.frame
    for (d, a), expected in EX1_CONNECTION.items():
        value = cov_along(frame.vectors[d], frame.vectors[a], g)
        coeffs = express_in_frame(value, frame)
        assert tuple(c.constant_value() for c in coeffs) == expected, (d, a)


EX2_CONNECTION = {
    (0, 0): (0, 0, -1),
    (1, 0): (0, 0, 0),
    (2, 0): (0, -2, 0),
    (0, 1): (0, 0, 0),
    (1, 1): (0, 0, 1),
    (2, 1): (-2, 0, 0),
    (0, 2): (1, 0, 0),
    (1, 2): (0, 1, 0),
    (2, 2): (0, 0, 0),
}


def test_ex2_frame_connection_table(ex2):
    g = ex2.structure.g
    frame = ex2.frame
    for (d, a), expected in EX2_CONNECTION.items():
        value = cov_along(frame.vectors[d], frame.vectors[a], g)
        coeffs = express_in_frame(value, frame)
        assert tuple(c.constant_value() for c in coeffs) == expected, (d, a)


# ---------------------------------------------------------------------------
# curvature
# ---------------------------------------------------------------------------


def test_flat_riemann_zero(flat):
    R = riemann(flat.structure.g)
    assert all(
        v.is_zero() for cube in R.comp for plane in cube for row in plane for v in row
    )


def test_riemann_antisymmetry_and_first_bianchi(ex1, ex2, flat):
    for g in metrics(ex1, ex2, flat).values():
        R = riemann(g).comp
        n = g.chart.dim
        for l in range(n):
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        assert (R[l][i][j][k] + R[l][j][i][k]).is_zero()
                        first_bianchi = R[l][i][j][k] + R[l][j][k][i] + R[l][k][i][j]
                        assert first_bianchi.is_zero()


def test_lowered_riemann_pair_symmetries(ex1, ex2, flat):
    for g in metrics(ex1, ex2, flat).values():
        low = riemann(g).lowered(g)
        n = g.chart.dim
        for l in range(n):
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        # antisymmetric in the R(X,Y) pair and the (Z, W) pair,
                        # symmetric under pair exchange
                        assert (low[l][i][j][k] + low[l][j][i][k]).is_zero()
                        assert (low[l][i][j][k] + low[k][i][j][l]).is_zero()
                        assert low[l][i][j][k] == low[j][k][l][i]


def test_scalar_curvatures(ex1, ex2, flat):
    assert scalar_curvature(ex1.structure.g) == 2
    assert scalar_curvature(ex2.structure.g) == -6
    assert scalar_curvature(flat.structure.g).is_zero()


EX1_CURVATURE = {
    # (pair, target) -> frame coefficients of R(pair) target
    ((0, 1), 2): (0, 0, 0),
    ((1, 2), 2): (0, -1, 0),
    ((0, 2), 2): (-1, 0, 0),
    ((0, 1), 1): (-3, 0, 0),
    ((1, 2), 1): (0, 0, -1),
    ((0, 2), 1): (0, 0, 0),
    ((0, 1), 0): (0, -3, 0),
    ((1, 2), 0): (0, 0, 0),
    ((0, 2), 0): (0, 0, 1),
}


def test_ex1_frame_curvature_table(ex1):
    R = riemann(ex1.structure.g)
    frame = ex1.frame
    for ((a, b), t), expected in EX1_CURVATURE.items():
        value = R.apply(frame.vectors[a], frame.vectors[b], frame.vectors[t])
        coeffs = express_in_frame(value, frame)
        assert tuple(c.constant_value() for c in coeffs) == expected, ((a, b), t)


EX2_CURVATURE = {
    ((0, 1), 2): (0, 0, 0),
    ((1, 2), 2): (0, -1, 0),
    ((0, 2), 2): (-1, 0, 0),
    ((0, 1), 1): (1, 0, 0),
    ((1, 2), 1): (0, 0, -1),
    ((0, 2), 1): (0, 0, 0),
    ((0, 1), 0): (0, 1, 0),
    ((1, 2), 0): (0, 0, 0),
    ((0, 2), 0): (0, 0, 1),
}


def test_ex2_frame_curvature_table(ex2):
    R = riemann(ex2.structure.g)
    frame = ex2.frame
    for ((a, b), t), expected in EX2_CURVATURE.items():
        value = R.apply(frame.vectors[a], frame.vectors[b], frame.vectors[t])
        coeffs = express_in_frame(value, frame)
        assert tuple(c.constant_value() for c in coeffs) == expected, ((a, b), t)


def test_contracted_bianchi(ex1, ex2, flat):
    for g in metrics(ex1, ex2, flat).values():
        assert contracted_bianchi_residual(g).is_zero()


# ---------------------------------------------------------------------------
# Lie calculus
# ---------------------------------------------------------------------------


def test_lie_bracket_coordinates():
    dx = VectorField.coordinate(CHART, 0)
    dy = VectorField.coordinate(CHART, 1)
    assert lie_bracket(dx, dy).is_zero()
    x_dx = VectorField(CHART, ["x", "0", "0"])
    assert lie_bracket(x_dx, dx) == -dx


def test_lie_bracket_ex1_frame(ex1):
    frame = ex1.frame
    e1, e2, xi = frame.vectors
    assert lie_bracket(e1, xi).is_zero()
    # [e1, e2] = -2 xi, computed directly from components
    assert lie_bracket(e1, e2) == xi.scale(-2)


def test_lie_derivative_metric_euler(flat):
    g = flat.structure.g
    dilation = VectorField(CHART, ["x", "y", "z"])
    assert lie_derivative(g, dilation) == g.as_tensor02().scale(2)


def test_lie_derivative_killing_xi_ex1(ex1):
    assert lie_derivative(ex1.structure.g, ex1.structure.xi).is_zero()


def test_lie_derivative_phi_flat(flat):
    assert lie_derivative(flat.structure.phi, flat.structure.xi).is_zero()


def test_killing_operator_identity(ex1, ex2, flat):
    # (L_V g)(X,Y) = g(nabla_X V, Y) + g(nabla_Y V, X) for arbitrary V
    rng = random.Random(20240811)
    for g in metrics(ex1, ex2, flat).values():
        chart = g.chart
        n = chart.dim
        for _ in range(3):
            V = random_vector_field(rng, chart)
            lie = lie_derivative(g, V)
            nabla_v = cov_derivative_vector(V, g)  # comp[k][i] = nabla_i V^k
            for i in range(n):
                for j in range(n):
                    expected = sum(
                        (
                            g.comp[k][j] * nabla_v.comp[k][i]
                            + g.comp[k][i] * nabla_v.comp[k][j]
                            for k in range(n)
                        ),
                        chart.zero(),
                    )
                    assert lie.comp[i][j] == expected


# ---------------------------------------------------------------------------
# exterior calculus
# ---------------------------------------------------------------------------


def test_d_closed_coordinate_form():
    dz = OneForm(CHART, ["0", "0", "1"])
    assert exterior_derivative(dz).is_zero()


def test_d_of_d_vanishes_random():
    rng = random.Random(987)
    for _ in range(10):
        f = random_polynomial(rng, CHART)
        from paracontact.ratcas import RationalFunction

        df = exterior_derivative(RationalFunction.from_polynomial(f))
        assert exterior_derivative(df).is_zero()
    for _ in range(10):
        w = OneForm(CHART, [random_polynomial(rng, CHART) for _ in range(3)])
        dw = exterior_derivative(w)
        assert exterior_derivative(dw).is_zero()


def test_wedge_basis():
    dz = OneForm(CHART, ["0", "0", "1"])
    dx_dy = Tensor02(CHART, [["0", "1", "0"], ["-1", "0", "0"], ["0", "0", "0"]])
    assert wedge(dz, dx_dy).coeff == 1
    zero2 = Tensor02.zero(CHART)
    assert wedge(dz, zero2).is_zero()


def test_wedge_requires_antisymmetry():
    from paracontact.errors import NotAntisymmetricError

    sym = Tensor02(CHART, [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    with pytest.raises(NotAntisymmetricError):
        wedge(OneForm(CHART, ["0", "0", "1"]), sym)


# ---------------------------------------------------------------------------
# gradient / divergence / Laplacian
# ---------------------------------------------------------------------------


def test_gradient_flat(flat):
    g = flat.structure.g
    grad_x = gradient(CHART.var("x"), g)
    assert grad_x == VectorField.coordinate(CHART, 0)
    # lowered index flips sign in the (-) direction
    grad_y = gradient(CHART.var("y"), g)
    assert grad_y == VectorField(CHART, ["0", "-1", "0"])


def test_laplacian_sign_convention(flat):
    g = flat.structure.g
    assert laplacian(CHART.expr("x^2"), g) == -2
    assert divergence(VectorField(CHART, ["x", "y", "z"]), g) == 3


def test_laplacian_of_constant_scalar_curvature(ex1):
    r = scalar_curvature(ex1.structure.g)
    assert laplacian(r, ex1.structure.g).is_zero()


# ---------------------------------------------------------------------------
# frames and signature
# ---------------------------------------------------------------------------


def test_express_in_frame_ex1(ex1):
    frame = ex1.frame
    dx = VectorField.coordinate(CHART, 0)
    assert [str(c) for c in express_in_frame(dx, frame)] == ["0", "0", "1"]
    dz = VectorField.coordinate(CHART, 2)
    assert [str(c) for c in express_in_frame(dz, frame)] == ["1/z", "0", "-2*y/z"]
    e2 = frame.vectors[1]
    assert [str(c) for c in express_in_frame(e2, frame)] == ["0", "1", "0"]


def test_signature(ex1, flat):
    assert signature_at(flat.structure.g, {"x": 0, "y": 0, "z": 0}) == (2, 1)
    assert signature_at(ex1.structure.g, {"x": 0, "y": 0, "z": 1}) == (2, 1)
    with pytest.raises(PoleError):
        signature_at(ex1.structure.g, {"x": 0, "y": 0, "z": 0})


def test_signature_degenerate_point():
    g = Metric(CHART, [["z", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    with pytest.raises(DegenerateMetricError):
        signature_at(g, {"x": 0, "y": 0, "z": 0})


def test_signature_zero_diagonal_uses_congruence():
    from paracontact.geometry import matrix_inertia

    assert matrix_inertia([[0, 1], [1, 0]]) == (1, 1)


def test_covariant_derivative_dispatch(ex1):
    S = ex1.structure
    nabla_eta = covariant_derivative(S.eta, S.g)
    assert isinstance(nabla_eta, Tensor02)
    nabla_xi = covariant_derivative(S.xi, S.g)
    # para-Sasakian: nabla xi = -phi
    assert nabla_xi == -S.phi
