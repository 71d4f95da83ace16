"""Coordinate-chart tensor calculus in exact rational-function arithmetic."""

from .chart import Chart
from .connection import (
    Christoffel,
    christoffel,
    cov_along,
    cov_derivative_oneform,
    cov_derivative_tensor02,
    cov_derivative_tensor11,
    cov_derivative_vector,
    covariant_derivative,
)
from .curvature import (
    RiemannTensor,
    contracted_bianchi_residual,
    ricci,
    ricci_operator,
    riemann,
    scalar_curvature,
)
from .fields import (
    Frame,
    Metric,
    OneForm,
    Tensor02,
    Tensor11,
    ThreeForm,
    VectorField,
)
from .linalg import express_in_frame, matrix_inertia, signature_at, solve_linear
from .operators import (
    divergence,
    exterior_derivative,
    gradient,
    hessian,
    laplacian,
    lie_bracket,
    lie_derivative,
    wedge,
)

__all__ = [
    "Chart",
    "Christoffel",
    "Frame",
    "Metric",
    "OneForm",
    "RiemannTensor",
    "Tensor02",
    "Tensor11",
    "ThreeForm",
    "VectorField",
    "christoffel",
    "contracted_bianchi_residual",
    "cov_along",
    "cov_derivative_oneform",
    "cov_derivative_tensor02",
    "cov_derivative_tensor11",
    "cov_derivative_vector",
    "covariant_derivative",
    "divergence",
    "exterior_derivative",
    "express_in_frame",
    "gradient",
    "hessian",
    "laplacian",
    "lie_bracket",
    "lie_derivative",
    "matrix_inertia",
    "ricci",
    "ricci_operator",
    "riemann",
    "scalar_curvature",
    "signature_at",
    "solve_linear",
    "wedge",
]
