"""Axiom checks, h-operator, normality, alpha form, classification."""

import pytest

from paracontact.errors import ClassMismatchError
from paracontact.geometry import (
    Chart,
    Metric,
    OneForm,
    Tensor02,
    Tensor11,
    VectorField,
    cov_derivative_vector,
    lie_derivative,
)
from paracontact.structures import (
    AxiomCheck,
    ParacontactStructure,
    alpha_form_check,
    check_almost_paracontact,
    check_frame_orthonormality,
    check_metric_compatibility,
    check_paracontact_metric,
    classify,
    fundamental_two_form,
    h_operator,
    normality_check,
    structure_identity_suite,
)

CHART = Chart.of("x", "y", "z")


def structure_with(S, **replacements):
    fields = {
        "chart": S.chart,
        "phi": S.phi,
        "xi": S.xi,
        "eta": S.eta,
        "g": S.g,
        "base_point": S.base_point,
        "frame": S.frame,
    }
    fields.update(replacements)
    return ParacontactStructure(**fields)


# ---------------------------------------------------------------------------
# almost paracontact axioms
# ---------------------------------------------------------------------------


def test_almost_paracontact_passes(ex1, ex2, flat):
    for loaded in (ex1, ex2, flat):
        report = check_almost_paracontact(loaded.structure)
        assert report.passed, report.failed_names()


def test_scaled_phi_breaks_square_axiom(ex1):
    S = structure_with(ex1.structure, phi=ex1.structure.phi.scale(2))
    report = check_almost_paracontact(S)
    assert not report["phi^2 - (I - eta*xi)"].passed
    assert report["eta(xi) - 1"].passed


def test_axiom_consequences_redundant(ex1, ex2, flat):
    # phi(xi) = 0 and eta o phi = 0 follow from the two defining axioms
    for loaded in (ex1, ex2, flat):
        report = check_almost_paracontact(loaded.structure)
        if report["eta(xi) - 1"].passed and report["phi^2 - (I - eta*xi)"].passed:
            assert report["phi(xi)"].passed
            assert report["eta o phi"].passed


# ---------------------------------------------------------------------------
# metric compatibility
# ---------------------------------------------------------------------------


def test_compatibility_passes(ex1, ex2):
    for loaded in (ex1, ex2):
        report = check_metric_compatibility(loaded.structure)
        assert report.passed, report.failed_names()


def test_riemannian_metric_incompatible(flat):
    g_riem = Metric(CHART, [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    S = structure_with(flat.structure, g=g_riem)
    report = check_metric_compatibility(S)
    assert not report["g(phiX,phiY) + g(X,Y) - eta(X)eta(Y)"].passed
    assert not report["signature"].passed


def test_two_form_antisymmetric_when_compatible(ex1, ex2, flat):
    for loaded in (ex1, ex2, flat):
        if check_metric_compatibility(loaded.structure).passed:
            assert fundamental_two_form(loaded.structure).is_antisymmetric()


def test_two_form_values(flat, ex1):
    phi_flat = fundamental_two_form(flat.structure)
    assert phi_flat.comp[0][1] == 1
    assert phi_flat.comp[1][0] == -1
    phi_ex1 = fundamental_two_form(ex1.structure)
    frame = ex1.frame
    e1, e2 = frame.vectors[0], frame.vectors[1]
    assert phi_ex1(e1, e2) == 1


def test_two_form_zero_phi(flat):
    S = structure_with(flat.structure, phi=Tensor11.zero(CHART))
    assert fundamental_two_form(S).is_zero()


# ---------------------------------------------------------------------------
# paracontact metric condition
# ---------------------------------------------------------------------------


def test_paracontact_metric_condition(ex1, ex2, flat):
    assert check_paracontact_metric(ex1.structure).passed
    assert not check_paracontact_metric(ex2.structure).passed
    assert not check_paracontact_metric(flat.structure).passed


def test_paracontact_metric_fails_with_kappa_1(ex1):
    # the convention experiment: x2 factor breaks d(eta) = Phi
    from fractions import Fraction

    assert not check_paracontact_metric(ex1.structure, kappa=Fraction(1)).passed


# ---------------------------------------------------------------------------
# h operator
# ---------------------------------------------------------------------------


def test_h_ex1(ex1):
    hop = h_operator(ex1.structure)
    assert hop.h_is_zero
    assert hop.report.passed
    # nabla xi = -phi on a 3-dimensional para-Sasakian structure
    assert cov_derivative_vector(ex1.structure.xi, ex1.structure.g) == -ex1.structure.phi


def test_h_flat(flat):
    hop = h_operator(flat.structure)
    assert hop.h_is_zero
    # flat structure is not paracontact metric, so nabla xi = -phi + phi h
    # need not hold; the entry is informational
    assert not hop.report["nabla(xi) - (-phi + phi o h)"].passed


def test_h_ex2_informational_residual(ex2):
    hop = h_operator(ex2.structure)
    assert hop.h_is_zero
    check = hop.report["nabla(xi) - (-phi + phi o h)"]
    assert not check.passed
    # the residual equals nabla(xi) + phi = (I - xi*eta) + phi here
    expected = (
        Tensor11.identity(CHART)
        - Tensor11.outer(ex2.structure.xi, ex2.structure.eta)
        + ex2.structure.phi
    )
    assert check.residual == expected


def test_h_zero_iff_xi_killing_ex1(ex1):
    hop = h_operator(ex1.structure)
    lie_g = lie_derivative(ex1.structure.g, ex1.structure.xi)
    assert hop.h_is_zero == lie_g.is_zero() == True  # noqa: E712


# ---------------------------------------------------------------------------
# normality
# ---------------------------------------------------------------------------


def test_normality(ex1, ex2, flat):
    for loaded in (ex1, ex2, flat):
        assert normality_check(loaded.structure).passed, loaded.name


def test_normality_broken_by_twisted_phi(flat):
    # a y-dependent rescaling of phi's first column destroys integrability
    phi = Tensor11(CHART, [["0", "1+y", "0"], ["1", "0", "0"], ["0", "0", "0"]])
    S = structure_with(flat.structure, phi=phi)
    assert not normality_check(S).passed


# ---------------------------------------------------------------------------
# alpha form
# ---------------------------------------------------------------------------


def test_alpha_flat(flat):
    report = alpha_form_check(flat.structure)
    assert report.d_eta_is_zero
    assert report.alpha == CHART.zero()
    assert report.alpha_is_constant


def test_alpha_ex2(ex2):
    report = alpha_form_check(ex2.structure)
    assert report.d_eta_is_zero
    assert report.alpha == CHART.one()


def test_alpha_ex1_not_closed(ex1):
    report = alpha_form_check(ex1.structure)
    assert not report.d_eta_is_zero


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def test_classification_verdicts(ex1, ex2, flat):
    assert classify(ex1.structure).verdict == "ParaSasakian"
    assert classify(ex2.structure).verdict == "ParaKenmotsu"
    assert classify(flat.structure).verdict == "Paracosymplectic"


def test_classification_deterministic(ex1):
    first = classify(ex1.structure)
    second = classify(ex1.structure)
    assert first.verdict == second.verdict
    assert [c.name for rep in first.axioms.values() for c in rep] == [
        c.name for rep in second.axioms.values() for c in rep
    ]


def test_invalid_verdict_lists_failures(flat):
    g_riem = Metric(CHART, [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    S = structure_with(flat.structure, g=g_riem)
    result = classify(S)
    assert result.structure_class.kind == "Invalid"
    assert "g(phiX,phiY) + g(X,Y) - eta(X)eta(Y)" in result.structure_class.failed


def test_frame_orthonormality_check(ex1):
    report = check_frame_orthonormality(ex1.structure)
    assert report is not None and report.passed
    assert check_frame_orthonormality(
        structure_with(ex1.structure, frame=None)
    ) is None


# ---------------------------------------------------------------------------
# identity suites
# ---------------------------------------------------------------------------


def test_identity_suites_pass(ex1, ex2, flat):
    for loaded in (ex1, ex2, flat):
        result = classify(loaded.structure)
        suite = structure_identity_suite(loaded.structure, result.structure_class)
        assert suite.passed, (loaded.name, suite.failed_names())


def test_identity_suite_class_mismatch(ex1):
    with pytest.raises(ClassMismatchError):
        structure_identity_suite(ex1.structure, "KParacontact")


def test_axiom_check_from_residual():
    check = AxiomCheck.from_residual("zero", CHART.zero())
    assert check.passed
    check = AxiomCheck.from_residual("nonzero", CHART.var("x"))
    assert not check.passed
