"""Deterministic report assembly for the CLI, in dict form.

Reports are plain nested dicts of strings/bools/lists so that the JSON
emission round-trips exactly (json.loads(emit(report)) == report) and is
byte-identical across runs on the same input.
"""

from __future__ import annotations

from fractions import Fraction

from . import __version__
from .analysis import (
    automorphism_check,
    conformal_identities_check,
    constant_curvature_solve,
    dim3_curvature_identity_check,
    einstein_classify,
    killing_check,
    ricci_closed_form_check,
    ricci_soliton_check,
    ricci_solve_mu,
    soliton_consequence_suite,
    xi_scalar_derivative_check,
    yamabe_check,
    yamabe_solve_lambda,
)
from .conventions import convention_summary
from .errors import ClassMismatchError, NotConformalError
from .geometry import (
    OneForm,
    Tensor02,
    Tensor11,
    ThreeForm,
    VectorField,
    christoffel,
    contracted_bianchi_residual,
    cov_along,
    express_in_frame,
    gradient,
    ricci,
    ricci_operator,
    riemann,
    scalar_curvature,
)
from .loader import LoadedManifold
from .ratcas import RationalFunction
from .structures import (
    INVALID,
    PARACOSYMPLECTIC,
    PARA_KENMOTSU,
    PARA_SASAKIAN,
    classify,
)

SUITE_CLASS = "class"
SUITE_DIM3 = "dim3"
SUITE_CONFORMAL = "conformal"
SUITES = (SUITE_CLASS, SUITE_DIM3, SUITE_CONFORMAL)


# ---------------------------------------------------------------------------
# rendering helpers
# ---------------------------------------------------------------------------


def render_residual(value):
    """Canonical nested-string rendering of any residual object."""
    if value is None:
        return None
    if isinstance(value, RationalFunction):
        return str(value)
    if isinstance(value, (VectorField, OneForm)):
        return [str(c) for c in value.components]
    if isinstance(value, (Tensor02, Tensor11)):
        return [[str(c) for c in row] for row in value.comp]
    if isinstance(value, ThreeForm):
        return str(value.coeff)
    if isinstance(value, tuple):
        return [render_residual(v) for v in value]
    raise TypeError(f"cannot render residual of type {type(value).__name__}")


def _check_entry(check):
    entry = {"name": check.name, "status": "zero" if check.passed else "nonzero"}
    if check.detail:
        entry["detail"] = check.detail
    if not check.passed and check.residual is not None:
        entry["residual"] = render_residual(check.residual)
    return entry


def _axiom_report_entries(report):
    return [_check_entry(c) for c in report]


def frame_combination(coeffs, names) -> str:
    """Render sum(c_a * F_a) like '-3*e1' / 'xi' / 'e1 - 2*e2' / '0'."""
    chunks = []
    for c, name in zip(coeffs, names):
        if c.is_zero():
            continue
        if c == 1:
            body = name
        elif c == -1:
            body = f"-{name}"
        else:
            text = str(c)
            if "/" in text or " " in text:
                text = f"({text})"
            body = f"{text}*{name}"
        if not chunks:
            chunks.append(body)
        elif body.startswith("-"):
            chunks.append(f" - {body[1:]}")
        else:
            chunks.append(f" + {body}")
    return "".join(chunks) if chunks else "0"


def _fraction_str(value) -> str:
    return str(Fraction(value))


# ---------------------------------------------------------------------------
# section builders
# ---------------------------------------------------------------------------


def header(loaded: LoadedManifold) -> dict:
    return {
        "schema": 1,
        "tool": "paracontact-verify",
        "version": __version__,
        "conventions": convention_summary(),
        "input": {
            "name": loaded.name,
            "source": loaded.source,
            "metric_mode": loaded.metric_mode,
            "coordinates": list(loaded.structure.chart.coords.names),
            "base_point": {
                k: _fraction_str(v) for k, v in loaded.structure.base_point.items()
            },
        },
        "notes": list(loaded.notes),
    }


def classification_section(loaded: LoadedManifold):
    result = classify(loaded.structure)
    section = {
        "verdict": result.verdict,
        "alpha": str(result.alpha) if result.alpha is not None else None,
        "h_vanishes": result.h.is_zero(),
        "axioms": {
            group: _axiom_report_entries(report)
            for group, report in result.axioms.items()
        },
    }
    failures = []
    if result.structure_class.kind == INVALID:
        failures.append(f"classification: {result.verdict}")
    return section, failures, result


def _frame_tables(loaded: LoadedManifold):
    structure = loaded.structure
    frame = structure.frame
    names = frame.names
    vectors = frame.vectors
    n = structure.chart.dim

    connection_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            value = cov_along(vectors[j], vectors[i], structure.g)
            coeffs = express_in_frame(value, frame)
            row.append(
                f"nabla_{{{names[j]}}} {names[i]} = {frame_combination(coeffs, names)}"
            )
        connection_rows.append(row)

    R = riemann(structure.g)
    pairs = [(0, 1), (1, 2), (0, 2)]
    curvature_rows = []
    for target in reversed(range(n)):
        row = []
        for a, b in pairs:
            value = R.apply(vectors[a], vectors[b], vectors[target])
            coeffs = express_in_frame(value, frame)
            row.append(
                f"R({names[a]},{names[b]}){names[target]} = "
                f"{frame_combination(coeffs, names)}"
            )
        curvature_rows.append(row)
    return connection_rows, curvature_rows


def curvature_section(loaded: LoadedManifold, with_frame: bool):
    structure = loaded.structure
    chart = structure.chart
    n = chart.dim
    gam = christoffel(structure.g).gamma
    names = chart.coords.names
    nonzero_gamma = []
    for k in range(n):
        for i in range(n):
            for j in range(i, n):
                if not gam[k][i][j].is_zero():
                    nonzero_gamma.append(
                        f"Gamma^{names[k]}_{{{names[i]},{names[j]}}} = {gam[k][i][j]}"
                    )
    section = {
        "scalar_curvature": str(scalar_curvature(structure.g)),
        "ricci_tensor": render_residual(ricci(structure.g)),
        "ricci_operator": render_residual(ricci_operator(structure.g)),
        "christoffel_nonzero": nonzero_gamma,
    }
    if with_frame and structure.frame is not None:
        connection_rows, curvature_rows = _frame_tables(loaded)
        section["frame_names"] = list(structure.frame.names)
        section["frame_connection_table"] = connection_rows
        section["frame_curvature_table"] = curvature_rows
    einstein = einstein_classify(structure)
    section["einstein"] = {
        "verdict": einstein.verdict,
        "alpha": str(einstein.alpha) if einstein.alpha is not None else None,
        "beta": str(einstein.beta) if einstein.beta is not None else None,
    }
    cc = constant_curvature_solve(structure)
    section["constant_curvature"] = _fraction_str(cc.c) if cc.c is not None else None
    return section, []


def _soliton_entry(report):
    return {
        "constant": _fraction_str(report.constant),
        "holds": report.holds,
        "sign_class": report.sign_class,
        "rho": str(report.rho) if report.rho is not None else None,
        "residual": "0" if report.holds else render_residual(report.residual),
    }


def solitons_section(loaded: LoadedManifold, structure_class=None):
    structure = loaded.structure
    if structure_class is None:
        structure_class = classify(structure).structure_class
    failures = []
    entries = []
    for candidate in loaded.candidates:
        entry = {
            "name": candidate.name,
            "V": [str(c) for c in candidate.V.components],
        }
        solved_lam = yamabe_solve_lambda(structure, candidate.V)
        entry["yamabe_lambda_solved"] = (
            _fraction_str(solved_lam) if solved_lam is not None else None
        )
        if candidate.lam is not None:
            yam = yamabe_check(structure, candidate.V, candidate.lam)
            entry["yamabe"] = _soliton_entry(yam)
            if not yam.holds:
                failures.append(
                    f"solitons: {candidate.name}: yamabe(lambda={candidate.lam}) residual nonzero"
                )
            else:
                suite = soliton_consequence_suite(
                    structure, candidate.V, candidate.lam, structure_class
                )
                entry["consequences"] = _axiom_report_entries(suite)
                failures.extend(
                    f"solitons: {candidate.name}: consequence {name} nonzero"
                    for name in suite.failed_names()
                )
        solved_mu = ricci_solve_mu(structure, candidate.V)
        entry["ricci_mu_solved"] = (
            _fraction_str(solved_mu) if solved_mu is not None else None
        )
        if candidate.mu is not None:
            ric = ricci_soliton_check(structure, candidate.V, candidate.mu)
            entry["ricci"] = _soliton_entry(ric)
            if not ric.holds:
                failures.append(
                    f"solitons: {candidate.name}: ricci(mu={candidate.mu}) residual nonzero"
                )
        if candidate.potential is not None:
            V_grad = gradient(candidate.potential, structure.g)
            matches = V_grad == candidate.V
            entry["gradient"] = {
                "potential": str(candidate.potential),
                "gradient_field": [str(c) for c in V_grad.components],
                "matches_V": matches,
            }
            if not matches:
                failures.append(
                    f"solitons: {candidate.name}: potential gradient differs from V"
                )
        is_killing, _ = killing_check(structure, candidate.V)
        entry["killing"] = is_killing
        auto = automorphism_check(structure, candidate.V)
        entry["automorphism"] = {
            "is_automorphism": auto.is_automorphism,
            "checks": _axiom_report_entries(auto.checks()),
        }
        entries.append(entry)
    return {"candidates": entries}, failures


def identities_section(loaded: LoadedManifold, suite: str, structure_class=None):
    structure = loaded.structure
    failures = []
    if structure_class is None:
        structure_class = classify(structure).structure_class
    if suite == SUITE_CLASS:
        from .structures import structure_identity_suite

        try:
            report = structure_identity_suite(structure, structure_class)
            checks = _axiom_report_entries(report)
            failures.extend(
                f"identities: {name} nonzero" for name in report.failed_names()
            )
            ricci_form = ricci_closed_form_check(structure, structure_class)
            checks.append(
                _check_entry_from("ricci_closed_form", ricci_form)
            )
            if not ricci_form.is_zero():
                failures.append("identities: ricci_closed_form nonzero")
            xi_r = xi_scalar_derivative_check(structure, structure_class)
            checks.append(_check_entry_from("xi_scalar_derivative_law", xi_r))
            if not xi_r.is_zero():
                failures.append("identities: xi_scalar_derivative_law nonzero")
        except ClassMismatchError as exc:
            checks = [{"name": "suite", "status": "skipped", "detail": str(exc)}]
        return {"suite": suite, "class": str(structure_class), "checks": checks}, failures
    if suite == SUITE_DIM3:
        residual = dim3_curvature_identity_check(structure)
        bianchi = contracted_bianchi_residual(structure.g)
        checks = [
            _check_entry_from("dim3_curvature_identity", residual),
            _check_entry_from("contracted_bianchi", bianchi),
        ]
        if any(entry["status"] == "nonzero" for entry in checks):
            failures.extend(
                f"identities: {entry['name']} nonzero"
                for entry in checks
                if entry["status"] == "nonzero"
            )
        return {"suite": suite, "checks": checks}, failures
    if suite == SUITE_CONFORMAL:
        checks = []
        for candidate in loaded.candidates:
            try:
                res1, res2 = conformal_identities_check(structure, candidate.V)
            except NotConformalError:
                checks.append(
                    {
                        "name": f"{candidate.name}",
                        "status": "skipped",
                        "detail": "vector field is not conformal",
                    }
                )
                continue
            ok = res1.is_zero() and res2.is_zero()
            entry = {
                "name": f"{candidate.name}",
                "status": "zero" if ok else "nonzero",
            }
            if not ok:
                entry["residual"] = {
                    "lie_ricci_identity": render_residual(res1),
                    "lie_scalar_identity": render_residual(res2),
                }
                failures.append(f"identities: conformal({candidate.name}) nonzero")
            checks.append(entry)
        return {"suite": suite, "checks": checks}, failures
    raise ValueError(f"unknown identity suite {suite!r}")


def _check_entry_from(name, residual):
    def _zero(value):
        if isinstance(value, tuple):
            return all(_zero(v) for v in value)
        return value.is_zero()

    ok = _zero(residual)
    entry = {"name": name, "status": "zero" if ok else "nonzero"}
    if not ok:
        entry["residual"] = render_residual(residual)
    return entry


# ---------------------------------------------------------------------------
# top-level reports
# ---------------------------------------------------------------------------


def build_report(loaded: LoadedManifold, command: str, *, with_frame=False, suite=None):
    """Assemble the report dict and failure list for one CLI command."""
    report = header(loaded)
    failures = []
    if command == "classify":
        section, fails, _ = classification_section(loaded)
        report["classification"] = section
        failures.extend(fails)
    elif command == "curvature":
        section, fails = curvature_section(loaded, with_frame)
        report["curvature"] = section
        failures.extend(fails)
    elif command == "solitons":
        cls_section, cls_fails, result = classification_section(loaded)
        section, fails = solitons_section(loaded, result.structure_class)
        report["classification"] = {"verdict": cls_section["verdict"]}
        report["solitons"] = section
        failures.extend(cls_fails)
        failures.extend(fails)
    elif command == "identities":
        cls_section, cls_fails, result = classification_section(loaded)
        section, fails = identities_section(loaded, suite, result.structure_class)
        report["classification"] = {"verdict": cls_section["verdict"]}
        report["identities"] = section
        failures.extend(cls_fails)
        failures.extend(fails)
    elif command == "report":
        cls_section, cls_fails, result = classification_section(loaded)
        report["classification"] = cls_section
        failures.extend(cls_fails)
        curv, fails = curvature_section(loaded, with_frame=True)
        report["curvature"] = curv
        failures.extend(fails)
        sol, fails = solitons_section(loaded, result.structure_class)
        report["solitons"] = sol
        failures.extend(fails)
        report["identities"] = {}
        for name in SUITES:
            section, fails = identities_section(loaded, name, result.structure_class)
            report["identities"][name] = section
            failures.extend(fails)
    else:
        raise ValueError(f"unknown command {command!r}")
    report["failures"] = failures
    return report


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------


def _text_checks(lines, entries, indent="  "):
    for entry in entries:
        status = entry["status"]
        mark = {"zero": "ok", "nonzero": "FAIL", "skipped": "skip"}[status]
        detail = f"  [{entry['detail']}]" if entry.get("detail") else ""
        lines.append(f"{indent}{mark:>4}  {entry['name']}{detail}")
        if status == "nonzero" and entry.get("residual") is not None:
            lines.append(f"{indent}      residual: {entry['residual']}")


def render_text(report: dict) -> str:
    lines = []
    conventions = report["conventions"]
    lines.append(
        f"paracontact-verify {report['version']}  "
        f"(kappa={conventions['exterior_kappa']}, wedge={conventions['wedge_factor']})"
    )
    source = report["input"]
    lines.append(f"input: {source['name']} [{source['source']}] mode={source['metric_mode']}")
    for note in report["notes"]:
        lines.append(f"note: {note}")
    if "classification" in report:
        section = report["classification"]
        lines.append(f"classification: {section['verdict']}")
        if section.get("alpha") is not None:
            lines.append(f"  alpha = {section['alpha']}")
        if "h_vanishes" in section:
            lines.append(f"  h = 0: {section['h_vanishes']}")
        for group, entries in section.get("axioms", {}).items():
            lines.append(f"  [{group}]")
            _text_checks(lines, entries, indent="    ")
    if "curvature" in report:
        section = report["curvature"]
        lines.append(f"scalar curvature r = {section['scalar_curvature']}")
        lines.append(f"Ricci tensor S = {section['ricci_tensor']}")
        lines.append(f"Ricci operator Q = {section['ricci_operator']}")
        if section["christoffel_nonzero"]:
            lines.append("nonzero Christoffel symbols:")
            for text in section["christoffel_nonzero"]:
                lines.append(f"  {text}")
        else:
            lines.append("all Christoffel symbols vanish")
        if "frame_connection_table" in section:
            lines.append("frame connection table:")
            for row in section["frame_connection_table"]:
                lines.append("  " + "   ".join(f"{cell:<28}" for cell in row).rstrip())
            lines.append("frame curvature table:")
            for row in section["frame_curvature_table"]:
                lines.append("  " + "   ".join(f"{cell:<28}" for cell in row).rstrip())
        einstein = section["einstein"]
        lines.append(
            f"einstein: {einstein['verdict']}"
            + (
                f" (alpha={einstein['alpha']}, beta={einstein['beta']})"
                if einstein["alpha"] is not None
                else ""
            )
        )
        cc = section["constant_curvature"]
        lines.append(f"constant curvature c = {cc if cc is not None else 'none'}")
    if "solitons" in report:
        for entry in report["solitons"]["candidates"]:
            lines.append(f"candidate {entry['name']}: V = {entry['V']}")
            if entry.get("yamabe"):
                yam = entry["yamabe"]
                lines.append(
                    f"  yamabe lambda={yam['constant']}: "
                    f"{'holds' if yam['holds'] else 'FAILS'} ({yam['sign_class']}, rho={yam['rho']})"
                )
            lines.append(f"  solved lambda: {entry['yamabe_lambda_solved']}")
            if entry.get("ricci"):
                ric = entry["ricci"]
                lines.append(
                    f"  ricci mu={ric['constant']}: "
                    f"{'holds' if ric['holds'] else 'FAILS'} ({ric['sign_class']})"
                )
            lines.append(f"  solved mu: {entry['ricci_mu_solved']}")
            if entry.get("gradient"):
                grad = entry["gradient"]
                lines.append(
                    f"  gradient potential {grad['potential']}: matches V = {grad['matches_V']}"
                )
            lines.append(f"  killing: {entry['killing']}")
            lines.append(
                f"  automorphism: {entry['automorphism']['is_automorphism']}"
            )
            if entry.get("consequences"):
                lines.append("  consequence residuals:")
                _text_checks(lines, entry["consequences"], indent="    ")
    if "identities" in report:
        section = report["identities"]
        suites = section if isinstance(section, dict) and "checks" not in section else {"": section}
        for key, sub in suites.items():
            if not isinstance(sub, dict) or "checks" not in sub:
                continue
            title = sub.get("suite", key)
            lines.append(f"identity suite [{title}]" + (f" class={sub['class']}" if "class" in sub else ""))
            _text_checks(lines, sub["checks"])
    if report["failures"]:
        lines.append("FAILURES:")
        for failure in report["failures"]:
            lines.append(f"  {failure}")
    else:
        lines.append("all requested checks passed")
    return "\n".join(lines) + "\n"
