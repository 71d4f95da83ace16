"""Almost paracontact structure axioms, h-operator, normality, classification.

A structure is the bundle (phi, xi, eta, g) on a chart.  Nothing is assumed
at construction: every axiom is checked symbolically and reported with its
full residual tensor, so failures stay diagnosable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conventions import exterior_kappa
from .errors import ClassMismatchError, NoAlphaError
from .geometry import (
    Chart,
    Frame,
    Metric,
    OneForm,
    Tensor02,
    Tensor11,
    VectorField,
    cov_derivative_tensor11,
    cov_derivative_vector,
    exterior_derivative,
    lie_bracket,
    lie_derivative,
    riemann,
    ricci,
    signature_at,
    wedge,
)
from .ratcas import RationalFunction


@dataclass(frozen=True)
class ParacontactStructure:
    """The bundle (phi, xi, eta, g) plus the base point used for signature checks."""

    chart: Chart
    phi: Tensor11
    xi: VectorField
    eta: OneForm
    g: Metric
    base_point: dict
    frame: Frame | None = None

    @property
    def dim(self) -> int:
        return self.chart.dim


def _residual_is_zero(residual) -> bool:
    if isinstance(residual, RationalFunction):
        return residual.is_zero()
    if isinstance(residual, (VectorField, OneForm, Tensor02, Tensor11)):
        return residual.is_zero()
    if isinstance(residual, tuple):
        return all(_residual_is_zero(r) for r in residual)
    raise TypeError(f"unsupported residual type {type(residual).__name__}")


@dataclass(frozen=True)
class AxiomCheck:
    """One named residual together with its derived pass/fail flag."""

    name: str
    residual: object
    passed: bool
    detail: str = ""

    @classmethod
    def from_residual(cls, name, residual, detail=""):
        return cls(name, residual, _residual_is_zero(residual), detail)


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_names(self):
        return tuple(c.name for c in self.checks if not c.passed)

    def __getitem__(self, name: str) -> AxiomCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __iter__(self):
        return iter(self.checks)


# ---------------------------------------------------------------------------
# structure classes
# ---------------------------------------------------------------------------

PARA_SASAKIAN = "ParaSasakian"
PARACOSYMPLECTIC = "Paracosymplectic"
PARA_KENMOTSU = "ParaKenmotsu"
K_PARACONTACT = "KParacontact"
PARACONTACT_METRIC = "ParacontactMetric"
ALMOST_ALPHA_PARACOSYMPLECTIC = "AlmostAlphaParacosymplectic"
ALMOST_PARACONTACT_METRIC = "AlmostParacontactMetric"
INVALID = "Invalid"


@dataclass(frozen=True)
class StructureClass:
    kind: str
    alpha: RationalFunction | None = None
    failed: tuple = ()

    def __str__(self):
        if self.kind == ALMOST_ALPHA_PARACOSYMPLECTIC and self.alpha is not None:
            return f"{self.kind}(alpha={self.alpha})"
        if self.kind == INVALID and self.failed:
            return f"{self.kind}({', '.join(self.failed)})"
        return self.kind


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------


def check_almost_paracontact(S: ParacontactStructure) -> AxiomReport:
    """eta(xi) = 1, phi^2 = I - eta (x) xi, and their consequences.

    trace(phi) = 0 is the dimension-3 stand-in for the equal-dimension
    eigendistribution axiom.
    """
    chart = S.chart
    eta_xi = S.eta(S.xi) - chart.one()
    phi2 = S.phi.compose(S.phi)
    expected = Tensor11.identity(chart) - Tensor11.outer(S.xi, S.eta)
    checks = (
        AxiomCheck.from_residual("eta(xi) - 1", eta_xi),
        AxiomCheck.from_residual("phi^2 - (I - eta*xi)", phi2 - expected),
        AxiomCheck.from_residual("phi(xi)", S.phi(S.xi)),
        AxiomCheck.from_residual(
            "eta o phi",
            OneForm(
                chart,
                [
                    sum(
                        (S.eta.components[i] * S.phi.comp[i][j] for i in range(chart.dim)),
                        chart.zero(),
                    )
                    for j in range(chart.dim)
                ],
            ),
        ),
        AxiomCheck.from_residual("trace(phi)", S.phi.trace()),
    )
    return AxiomReport(checks)


def check_metric_compatibility(S: ParacontactStructure) -> AxiomReport:
    """g(phi X, phi Y) = -g(X, Y) + eta(X) eta(Y), plus signature (n+1, n)."""
    chart = S.chart
    n = chart.dim
    # (phi^T g phi)_{ij} = phi^k_i g_{kl} phi^l_j
    lowered = [
        [
            sum(
                (
                    S.phi.comp[k][i] * S.g.comp[k][l] * S.phi.comp[l][j]
                    for k in range(n)
                    for l in range(n)
                ),
                chart.zero(),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    compat = Tensor02(chart, lowered) + S.g.as_tensor02() - Tensor02.outer(S.eta, S.eta)
    flat_xi = S.g.lower(S.xi) - S.eta
    expected_signature = ((n + 1) // 2, n // 2)
    actual = signature_at(S.g, S.base_point)
    checks = (
        AxiomCheck.from_residual("g(phiX,phiY) + g(X,Y) - eta(X)eta(Y)", compat),
        AxiomCheck.from_residual("g(.,xi) - eta", flat_xi),
        AxiomCheck(
            "signature",
            None,
            actual == expected_signature,
            f"computed {actual}, required {expected_signature}",
        ),
    )
    return AxiomReport(checks)


def check_frame_orthonormality(S: ParacontactStructure) -> AxiomReport | None:
    """g(F_a, F_b) - sign_a delta_ab for a declared signed frame; None without one.

    This is where metric typos surface most directly: a printed metric that
    fails to make the declared frame pseudo-orthonormal shows its defect as
    a nonzero (a, b) entry.
    """
    frame = S.frame
    if frame is None or frame.signs is None:
        return None
    chart = S.chart
    n = chart.dim
    g02 = S.g.as_tensor02()
    residual = tuple(
        tuple(
            g02(frame.vectors[a], frame.vectors[b])
            - (chart.const(frame.signs[a]) if a == b else chart.zero())
            for b in range(n)
        )
        for a in range(n)
    )
    return AxiomReport(
        (AxiomCheck.from_residual("g(F_a,F_b) - sign_a*delta_ab", residual),)
    )


def fundamental_two_form(S: ParacontactStructure) -> Tensor02:
    """Phi(X, Y) = g(X, phi Y), i.e. Phi_ij = g_ik phi^k_j."""
    chart = S.chart
    n = chart.dim
    comp = [
        [
            sum((S.g.comp[i][k] * S.phi.comp[k][j] for k in range(n)), chart.zero())
            for j in range(n)
        ]
        for i in range(n)
    ]
    return Tensor02(chart, comp)


def check_paracontact_metric(S: ParacontactStructure, kappa=None) -> AxiomReport:
    """d eta = Phi under the calibrated convention factor."""
    residual = exterior_derivative(S.eta, kappa) - fundamental_two_form(S)
    return AxiomReport((AxiomCheck.from_residual("d(eta) - Phi", residual),))


@dataclass(frozen=True)
class HOperatorReport:
    h: Tensor11
    report: AxiomReport

    @property
    def h_is_zero(self) -> bool:
        return self.h.is_zero()


def h_operator(S: ParacontactStructure) -> HOperatorReport:
    """h = 1/2 L_xi phi with its structural residuals.

    The last entry, nabla(xi) - (-phi + phi h), holds on paracontact metric
    manifolds only; elsewhere it is reported as information, not a failure
    of the structure itself.
    """
    chart = S.chart
    h = lie_derivative(S.phi, S.xi).scale(Fraction(1, 2))
    nabla_xi = cov_derivative_vector(S.xi, S.g)
    expected = -S.phi + S.phi.compose(h)
    checks = (
        AxiomCheck.from_residual("h(xi)", h(S.xi)),
        AxiomCheck.from_residual("trace(h)", h.trace()),
        AxiomCheck.from_residual("trace(h o phi)", h.compose(S.phi).trace()),
        AxiomCheck.from_residual("h o phi + phi o h", h.compose(S.phi) + S.phi.compose(h)),
        AxiomCheck.from_residual("nabla(xi) - (-phi + phi o h)", nabla_xi - expected),
    )
    return HOperatorReport(h, AxiomReport(checks))


def nijenhuis_torsion(phi: Tensor11):
    """[phi, phi](d_i, d_j) as nested tuples [i][j] of VectorFields."""
    chart = phi.chart
    n = chart.dim
    columns = [phi.column(j) for j in range(n)]
    coordinate = [VectorField.coordinate(chart, i) for i in range(n)]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            # coordinate brackets vanish, so phi^2 [X,Y] drops out
            value = lie_bracket(columns[i], columns[j])
            value = value - phi(lie_bracket(columns[i], coordinate[j]))
            value = value - phi(lie_bracket(coordinate[i], columns[j]))
            row.append(value)
        out.append(tuple(row))
    return tuple(out)


def normality_check(S: ParacontactStructure, kappa=None) -> AxiomReport:
    """N_phi = [phi, phi] - 2 d(eta) (x) xi must vanish."""
    chart = S.chart
    n = chart.dim
    torsion = nijenhuis_torsion(S.phi)
    d_eta = exterior_derivative(S.eta, kappa)
    residual = []
    for i in range(n):
        row = []
        for j in range(n):
            value = torsion[i][j] - S.xi.scale(d_eta.comp[i][j] * 2)
            row.append(value)
        residual.append(tuple(row))
    return AxiomReport(
        (AxiomCheck.from_residual("N_phi = [phi,phi] - 2*d(eta)*xi", tuple(residual)),)
    )


@dataclass(frozen=True)
class AlphaFormReport:
    """d(eta) = 0 and, when solvable, the alpha of d(Phi) = 2 alpha eta ^ Phi."""

    d_eta: Tensor02
    alpha: RationalFunction | None

    @property
    def d_eta_is_zero(self) -> bool:
        return self.d_eta.is_zero()

    @property
    def alpha_is_constant(self) -> bool:
        return self.alpha is not None and self.alpha.is_constant()


def alpha_form_check(S: ParacontactStructure, kappa=None) -> AlphaFormReport:
    d_eta = exterior_derivative(S.eta, kappa)
    two_form = fundamental_two_form(S)
    d_phi = exterior_derivative(two_form)
    eta_wedge_phi = wedge(S.eta, two_form)
    if eta_wedge_phi.is_zero():
        if not d_phi.is_zero():
            raise NoAlphaError("d(Phi) != 0 while eta ^ Phi vanishes identically")
        return AlphaFormReport(d_eta, None)
    alpha = d_phi.coeff / (eta_wedge_phi.coeff * 2)
    return AlphaFormReport(d_eta, alpha)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationResult:
    structure_class: StructureClass
    axioms: dict
    h: Tensor11
    alpha: RationalFunction | None = None

    @property
    def verdict(self) -> str:
        return str(self.structure_class)


def classify(S: ParacontactStructure, kappa=None) -> ClassificationResult:
    """Decision tree over the axiom reports; Invalid is a verdict, not an error."""
    if kappa is None:
        kappa = exterior_kappa()
    almost = check_almost_paracontact(S)
    compat = check_metric_compatibility(S)
    pm = check_paracontact_metric(S, kappa)
    hop = h_operator(S)
    normal = normality_check(S, kappa)
    axioms = {
        "almost_paracontact": almost,
        "metric_compatibility": compat,
        "paracontact_metric": pm,
        "h_operator": hop.report,
        "normality": normal,
    }
    frame_check = check_frame_orthonormality(S)
    if frame_check is not None:
        axioms["frame_orthonormality"] = frame_check

    if not (almost.passed and compat.passed):
        failed = almost.failed_names() + compat.failed_names()
        return ClassificationResult(
            StructureClass(INVALID, failed=failed), axioms, hop.h
        )

    if pm.passed:
        if normal.passed:
            kind = PARA_SASAKIAN
        elif hop.h_is_zero:
            kind = K_PARACONTACT
        else:
            kind = PARACONTACT_METRIC
        return ClassificationResult(StructureClass(kind), axioms, hop.h)

    try:
        alpha_report = alpha_form_check(S, kappa)
    except NoAlphaError:
        alpha_report = None
    if alpha_report is not None:
        axioms["alpha_form"] = AxiomReport(
            (
                AxiomCheck.from_residual("d(eta)", alpha_report.d_eta),
                AxiomCheck(
                    "alpha",
                    None,
                    alpha_report.alpha is not None,
                    f"alpha = {alpha_report.alpha}" if alpha_report.alpha is not None else "undetermined",
                ),
            )
        )
    if (
        alpha_report is not None
        and alpha_report.d_eta_is_zero
        and alpha_report.alpha is not None
    ):
        alpha = alpha_report.alpha
        chart = S.chart
        if normal.passed and alpha == chart.zero():
            return ClassificationResult(StructureClass(PARACOSYMPLECTIC), axioms, hop.h, alpha)
        if normal.passed and alpha == chart.one():
            return ClassificationResult(StructureClass(PARA_KENMOTSU), axioms, hop.h, alpha)
        return ClassificationResult(
            StructureClass(ALMOST_ALPHA_PARACOSYMPLECTIC, alpha=alpha), axioms, hop.h, alpha
        )
    return ClassificationResult(StructureClass(ALMOST_PARACONTACT_METRIC), axioms, hop.h)


# ---------------------------------------------------------------------------
# per-class identity suites
# ---------------------------------------------------------------------------


def _nabla_phi(S):
    return cov_derivative_tensor11(S.phi, S.g)


def structure_identity_suite(S: ParacontactStructure, structure_class) -> AxiomReport:
    """The class's curvature/connection identities as residual tensors.

    Supported classes: ParaSasakian, Paracosymplectic, ParaKenmotsu.
    """
    kind = structure_class.kind if isinstance(structure_class, StructureClass) else str(structure_class)
    chart = S.chart
    n = chart.dim
    R = riemann(S.g).comp
    S_ric = ricci(S.g)
    eta = S.eta.components
    xi = S.xi.components
    g = S.g.comp
    nabla_xi = cov_derivative_vector(S.xi, S.g)
    nphi = _nabla_phi(S)

    def delta(a, b):
        return chart.one() if a == b else chart.zero()

    def r_xixi(coeff):
        # R(X,Y)xi + coeff*(eta(Y)X - eta(X)Y), indices [l][i][j]
        out = []
        for l in range(n):
            plane = []
            for i in range(n):
                row = []
                for j in range(n):
                    total = chart.zero()
                    for k in range(n):
                        total = total + R[l][i][j][k] * xi[k]
                    total = total + (eta[j] * delta(l, i) - eta[i] * delta(l, j)) * coeff
                    row.append(total)
                plane.append(tuple(row))
            out.append(tuple(plane))
        return tuple(out)

    def s_xi(coeff):
        # S(X, xi) + coeff*eta(X) as a OneForm
        comps = []
        for j in range(n):
            total = chart.zero()
            for k in range(n):
                total = total + S_ric.comp[j][k] * xi[k]
            comps.append(total + eta[j] * coeff)
        return OneForm(chart, comps)

    one = chart.one()
    n_minus_1 = chart.const(n - 1)

    if kind == PARA_SASAKIAN:
        # (nabla_X phi)Y + g(X,Y)xi - eta(Y)X, indices [k][i][j] (k = direction)
        nabla_phi_res = tuple(
            tuple(
                tuple(
                    nphi[k][i][j] + g[k][j] * xi[i] - eta[j] * delta(i, k)
                    for j in range(n)
                )
                for i in range(n)
            )
            for k in range(n)
        )
        r_xi_x_y = tuple(
            tuple(
                tuple(
                    sum((R[l][i][j][k] * xi[i] for i in range(n)), chart.zero())
                    + g[j][k] * xi[l]
                    - eta[k] * delta(l, j)
                    for k in range(n)
                )
                for j in range(n)
            )
            for l in range(n)
        )
        checks = (
            AxiomCheck.from_residual("R(X,Y)xi + (eta(Y)X - eta(X)Y)", r_xixi(one)),
            AxiomCheck.from_residual("(nabla_X phi)Y + g(X,Y)xi - eta(Y)X", nabla_phi_res),
            AxiomCheck.from_residual("nabla(xi) + phi", nabla_xi + S.phi),
            AxiomCheck.from_residual("R(xi,X)Y + g(X,Y)xi - eta(Y)X", r_xi_x_y),
            AxiomCheck.from_residual("S(X,xi) + (n-1)eta(X)", s_xi(n_minus_1)),
        )
        return AxiomReport(checks)

    if kind == PARACOSYMPLECTIC:
        checks = (
            AxiomCheck.from_residual("R(X,Y)xi", r_xixi(chart.zero())),
            AxiomCheck.from_residual("(nabla_X phi)Y", nphi),
            AxiomCheck.from_residual("nabla(xi)", nabla_xi),
            AxiomCheck.from_residual("S(X,xi)", s_xi(chart.zero())),
        )
        return AxiomReport(checks)

    if kind == PARA_KENMOTSU:
        # (nabla_X phi)Y - g(phi X, Y)xi + eta(Y)phi X, indices [k][i][j]
        phi_flat = fundamental_two_form(S)  # Phi_kj = g(d_k, phi d_j)
        nabla_phi_res = tuple(
            tuple(
                tuple(
                    nphi[k][i][j] - phi_flat.comp[j][k] * xi[i] + eta[j] * S.phi.comp[i][k]
                    for j in range(n)
                )
                for i in range(n)
            )
            for k in range(n)
        )
        expected_nabla_xi = Tensor11.identity(chart) - Tensor11.outer(S.xi, S.eta)
        checks = (
            # eta(X)Y - eta(Y)X = -(eta(Y)X - eta(X)Y): same residual as r_xixi(1)
            AxiomCheck.from_residual("R(X,Y)xi - (eta(X)Y - eta(Y)X)", r_xixi(one)),
            AxiomCheck.from_residual(
                "(nabla_X phi)Y - g(phiX,Y)xi + eta(Y)phiX", nabla_phi_res
            ),
            AxiomCheck.from_residual("nabla(xi) - (X - eta(X)xi)", nabla_xi - expected_nabla_xi),
            AxiomCheck.from_residual("S(X,xi) + (n-1)eta(X)", s_xi(n_minus_1)),
        )
        return AxiomReport(checks)

    raise ClassMismatchError(f"no identity suite for class {kind}")
