"""Calibrated convention constants and their environment override.

The literature splits on the exterior-derivative normalization for
one-forms.  Both bundled calibration conditions (the paracontact-metric
condition d-eta = Phi on the first example structure, and d-Phi =
2 eta ^ Phi on the second) pin kappa = 1/2 when the two-form derivative
and the wedge use plain alternating sums with no extra factor, so that is
the shipped default.  ``PCV_CONVENTION_KAPPA`` (value ``1`` or ``1/2``)
overrides it for convention experiments.
"""

from __future__ import annotations

import os
from fractions import Fraction

CALIBRATED_KAPPA = Fraction(1, 2)
WEDGE_FACTOR = Fraction(1)

_ENV_VAR = "PCV_CONVENTION_KAPPA"
_ALLOWED = {"1": Fraction(1), "1/2": Fraction(1, 2)}


def exterior_kappa() -> Fraction:
    """The active one-form exterior-derivative factor."""
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return CALIBRATED_KAPPA
    value = _ALLOWED.get(raw.strip())
    if value is None:
        raise ValueError(
            f"{_ENV_VAR} must be '1' or '1/2', not {raw!r}"
        )
    return value


def convention_summary() -> dict:
    """Constants recorded in every report header."""
    return {
        "exterior_kappa": str(exterior_kappa()),
        "wedge_factor": str(WEDGE_FACTOR),
    }
