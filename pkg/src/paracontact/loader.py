"""Manifold-definition files: JSON schema, validation, frame reconstruction.

All scalars in a definition file are strings (exact expressions or exact
rationals); a float literal anywhere is a schema error.  When a frame block
is present, the metric can be reconstructed as the unique symmetric tensor
making the frame pseudo-orthonormal with the declared signs; a printed
metric matrix supplied alongside is then compared against the
reconstruction and mismatches are recorded as discrepancy notes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .analysis import SolitonCandidate
from .errors import ParacontactError, SchemaError
from .geometry import Chart, Frame, Metric, OneForm, Tensor02, Tensor11, VectorField
from .geometry.linalg import determinant, inverse_matrix
from .ratcas import CoordinateSystem, parse_expr
from .structures import ParacontactStructure

SCHEMA_VERSION = 1

METRIC_MODE_FROM_FRAME = "from_frame"
METRIC_MODE_PRINTED = "printed"


@dataclass(frozen=True)
class LoadedManifold:
    name: str
    structure: ParacontactStructure
    metric_mode: str
    candidates: tuple
    notes: tuple
    source: str

    @property
    def frame(self) -> Frame | None:
        return self.structure.frame


def _reject_floats(node, path="$"):
    if isinstance(node, float):
        raise SchemaError(
            f"float literal at {path}; write all numbers as exact strings"
        )
    if isinstance(node, dict):
        for key, value in node.items():
            _reject_floats(value, f"{path}.{key}")
    elif isinstance(node, list):
        for i, value in enumerate(node):
            _reject_floats(value, f"{path}[{i}]")


def _require(data, key, kind, path="$"):
    if key not in data:
        raise SchemaError(f"missing required field {path}.{key}")
    value = data[key]
    if not isinstance(value, kind):
        raise SchemaError(
            f"{path}.{key} must be {kind.__name__}, got {type(value).__name__}"
        )
    return value


def _parse_rational(text, where) -> Fraction:
    if not isinstance(text, str):
        raise SchemaError(f"{where} must be a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: not an exact rational: {text!r} ({exc})") from exc


def _parse_component(text, cs, where):
    if not isinstance(text, str):
        raise SchemaError(f"{where} must be an expression string, got {text!r}")
    try:
        return parse_expr(text, cs)
    except ParacontactError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _parse_vector(entries, cs, where):
    if not isinstance(entries, list) or len(entries) != len(cs):
        raise SchemaError(f"{where} must list {len(cs)} expression strings")
    return [_parse_component(t, cs, f"{where}[{i}]") for i, t in enumerate(entries)]


def _parse_matrix(rows, cs, where):
    if not isinstance(rows, list) or len(rows) != len(cs):
        raise SchemaError(f"{where} must be a {len(cs)}x{len(cs)} matrix of strings")
    return [_parse_vector(row, cs, f"{where}[{i}]") for i, row in enumerate(rows)]


def _reconstruct_metric(chart, frame: Frame, signs):
    """g = sum_a signs[a] * theta^a (x) theta^a with theta the dual coframe."""
    n = chart.dim
    E = frame.component_matrix()
    det = determinant(E, chart)
    inv = inverse_matrix(E, chart, det)  # row a = coframe theta^a
    comp = []
    for i in range(n):
        row = []
        for j in range(n):
            total = chart.zero()
            for a in range(n):
                total = total + inv[a][i] * inv[a][j] * signs[a]
            row.append(total)
        comp.append(row)
    return Metric(chart, comp)


def load(path, metric_mode: str | None = None) -> LoadedManifold:
    """Read, validate, and assemble a manifold definition.

    metric_mode overrides the file's own "metric_mode" field; the default is
    frame reconstruction whenever a frame block is present.
    """
    path = Path(path)
    try:
        raw = path.read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: top level must be an object")
    _reject_floats(data)

    schema = _require(data, "schema", int)
    if schema != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {schema}")
    name = data.get("name", path.stem)

    coords = _require(data, "coordinates", list)
    if not all(isinstance(c, str) for c in coords):
        raise SchemaError("$.coordinates must be a list of strings")
    try:
        cs = CoordinateSystem(coords)
    except ValueError as exc:
        raise SchemaError(f"$.coordinates: {exc}") from exc
    chart = Chart(cs)
    n = chart.dim

    base_raw = _require(data, "base_point", dict)
    base_point = {}
    for cname in cs.names:
        if cname not in base_raw:
            raise SchemaError(f"$.base_point must assign coordinate {cname!r}")
        base_point[cname] = _parse_rational(base_raw[cname], f"$.base_point.{cname}")
    extra = set(base_raw) - set(cs.names)
    if extra:
        raise SchemaError(f"$.base_point assigns unknown coordinates {sorted(extra)}")

    phi = Tensor11(chart, _parse_matrix(_require(data, "phi", list), cs, "$.phi"))
    xi = VectorField(chart, _parse_vector(_require(data, "xi", list), cs, "$.xi"))
    eta = OneForm(chart, _parse_vector(_require(data, "eta", list), cs, "$.eta"))

    frame = None
    signs = None
    if "frame" in data:
        frame_data = _require(data, "frame", dict)
        vectors_raw = _require(frame_data, "vectors", list, "$.frame")
        if len(vectors_raw) != n:
            raise SchemaError(f"$.frame.vectors must list {n} vector fields")
        vectors = [
            VectorField(chart, _parse_vector(v, cs, f"$.frame.vectors[{a}]"))
            for a, v in enumerate(vectors_raw)
        ]
        signs = _require(frame_data, "signs", list, "$.frame")
        if len(signs) != n or any(s not in (1, -1) for s in signs):
            raise SchemaError(f"$.frame.signs must list {n} entries from {{1, -1}}")
        names = frame_data.get("names")
        if names is not None and (
            not isinstance(names, list) or len(names) != n
        ):
            raise SchemaError(f"$.frame.names must list {n} strings")
        frame = Frame(chart, vectors, names, signs)

    mode = metric_mode or data.get("metric_mode")
    if mode is None:
        mode = METRIC_MODE_FROM_FRAME if frame is not None else METRIC_MODE_PRINTED
    if mode not in (METRIC_MODE_FROM_FRAME, METRIC_MODE_PRINTED):
        raise SchemaError(f"unknown metric_mode {mode!r}")

    printed_metric = None
    if "metric" in data:
        printed_metric = Metric(
            chart, _parse_matrix(_require(data, "metric", list), cs, "$.metric")
        )

    notes = [str(s) for s in data.get("source_notes", [])]
    if mode == METRIC_MODE_FROM_FRAME:
        if frame is None:
            raise SchemaError("metric_mode 'from_frame' requires a frame block")
        g = _reconstruct_metric(chart, frame, signs)
        if printed_metric is not None:
            for i in range(n):
                for j in range(i, n):
                    got = printed_metric.comp[i][j]
                    want = g.comp[i][j]
                    if got != want:
                        notes.append(
                            f"metric[{i}][{j}]: file prints {got}, "
                            f"frame reconstruction gives {want}"
                        )
    else:
        if printed_metric is None:
            raise SchemaError("metric_mode 'printed' requires a metric matrix")
        g = printed_metric

    structure = ParacontactStructure(chart, phi, xi, eta, g, base_point, frame)

    candidates = []
    for k, entry in enumerate(data.get("candidates", [])):
        if not isinstance(entry, dict):
            raise SchemaError(f"$.candidates[{k}] must be an object")
        where = f"$.candidates[{k}]"
        V = VectorField(chart, _parse_vector(_require(entry, "V", list, where), cs, f"{where}.V"))
        lam = entry.get("lambda")
        mu = entry.get("mu")
        potential = entry.get("potential")
        candidates.append(
            SolitonCandidate(
                V=V,
                name=str(entry.get("name", f"candidate{k}")),
                lam=_parse_rational(lam, f"{where}.lambda") if lam is not None else None,
                mu=_parse_rational(mu, f"{where}.mu") if mu is not None else None,
                potential=(
                    _parse_component(potential, cs, f"{where}.potential")
                    if potential is not None
                    else None
                ),
            )
        )

    return LoadedManifold(
        name=str(name),
        structure=structure,
        metric_mode=mode,
        candidates=tuple(candidates),
        notes=tuple(notes),
        source=str(path),
    )
