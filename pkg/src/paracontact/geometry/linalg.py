"""Exact linear algebra over the rational-function field and over Q."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegenerateFrameError, DegenerateMetricError, PoleError
from ..ratcas import RationalFunction


def determinant(matrix, chart) -> RationalFunction:
    """Determinant by cofactor expansion; matrices here are at most 3x3."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = chart.zero()
    for j in range(n):
        minor = [
            [matrix[i][k] for k in range(n) if k != j] for i in range(1, n)
        ]
        cofactor = matrix[0][j] * determinant(minor, chart)
        total = total + cofactor if j % 2 == 0 else total - cofactor
    return total


def inverse_matrix(matrix, chart, det=None):
    """Adjugate inverse of a square matrix of rational functions."""
    n = len(matrix)
    if det is None:
        det = determinant(matrix, chart)
    if det.is_zero():
        raise DegenerateMetricError("matrix is not invertible")
    if n == 1:
        return ((chart.one() / det,),)
    inv = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [
                [matrix[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            cof = determinant(minor, chart)
            if (i + j) % 2:
                cof = -cof
            row.append(cof / det)
        inv.append(tuple(row))
    return tuple(inv)


def solve_linear(matrix, rhs, chart):
    """Solve M c = rhs exactly by Cramer's rule; M is square, det != 0."""
    n = len(matrix)
    det = determinant(matrix, chart)
    if det.is_zero():
        raise DegenerateFrameError("linear system is singular")
    solution = []
    for k in range(n):
        replaced = [
            [rhs[i] if j == k else matrix[i][j] for j in range(n)] for i in range(n)
        ]
        solution.append(determinant(replaced, chart) / det)
    return tuple(solution)


def express_in_frame(W, frame):
    """Coefficients c with W = sum_a c_a * frame.vectors[a], solved exactly."""
    matrix = frame.component_matrix()
    return solve_linear(matrix, W.components, W.chart)


def signature_at(g, point):
    """Inertia (n_plus, n_minus) of the metric matrix at an exact point.

    Uses symmetric Gaussian elimination on Fractions (congruence transforms
    preserve inertia).  Raises PoleError if any component has a pole at the
    point and DegenerateMetricError if the evaluated matrix is singular.
    """
    n = g.chart.dim
    m = [[g.comp[i][j].evaluate(point) for j in range(n)] for i in range(n)]
    return matrix_inertia(m)


def matrix_inertia(m):
    """Inertia of an exact symmetric rational matrix; raises if degenerate."""
    n = len(m)
    m = [[Fraction(v) for v in row] for row in m]
    active = list(range(n))
    n_plus = n_minus = 0
    while active:
        pivot = next((k for k in active if m[k][k] != 0), None)
        if pivot is None:
            off = next(
                (
                    (i, j)
                    for i in active
                    for j in active
                    if i < j and m[i][j] != 0
                ),
                None,
            )
            if off is None:
                raise DegenerateMetricError("matrix is degenerate at the point")
            i, j = off
            # congruence: e_i <- e_i + e_j makes the (i,i) entry 2*m[i][j] != 0
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            continue
        d = m[pivot][pivot]
        if d > 0:
            n_plus += 1
        else:
            n_minus += 1
        active.remove(pivot)
        for i in active:
            for j in active:
                m[i][j] -= m[i][pivot] * m[pivot][j] / d
    return (n_plus, n_minus)
