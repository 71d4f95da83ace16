"""Shared fixtures: the three bundled structures and random-value generators."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from paracontact.geometry import Chart, VectorField
from paracontact.loader import load
from paracontact.ratcas import Polynomial, RationalFunction

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "paracontact" / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


@pytest.fixture(scope="session")
def chart():
    return Chart.of("x", "y", "z")


@pytest.fixture(scope="session")
def ex1():
    return load(fixture_path("ex1"))


@pytest.fixture(scope="session")
def ex2():
    return load(fixture_path("ex2"))


@pytest.fixture(scope="session")
def flat():
    return load(fixture_path("flat"))


@pytest.fixture(scope="session")
def all_manifolds(ex1, ex2, flat):
    return {"ex1": ex1, "ex2": ex2, "flat": flat}


# ---------------------------------------------------------------------------
# random generators (seeded; used by the property suites)
# ---------------------------------------------------------------------------


def random_polynomial(rng: random.Random, chart, max_degree=2, max_terms=3, zero_ok=True):
    n = chart.dim
    terms = {}
    for _ in range(rng.randint(0 if zero_ok else 1, max_terms)):
        exps = tuple(rng.randint(0, max_degree) for _ in range(n))
        coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if coeff:
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
    return Polynomial(chart.coords, terms)


def random_rational_function(rng: random.Random, chart) -> RationalFunction:
    num = random_polynomial(rng, chart)
    den = random_polynomial(rng, chart, max_degree=1, max_terms=2)
    if den.is_zero():
        den = Polynomial.one(chart.coords)
    return RationalFunction(num, den)


def random_point(rng: random.Random, chart):
    return {name: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for name in chart.coords.names}


def random_vector_field(rng: random.Random, chart) -> VectorField:
    return VectorField(chart, [random_polynomial(rng, chart) for _ in range(chart.dim)])
