"""Sparse multivariate polynomials over the rationals.

Terms are stored as a map from exponent vectors (one nonnegative integer per
coordinate) to nonzero ``Fraction`` coefficients.  The monomial order used for
leading terms and printing is graded lexicographic with respect to the
coordinate order of the chart.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, lcm as int_lcm

from ..errors import MissingCoordinateError
from .coordinates import CoordinateSystem

Rational = Fraction


def _grlex_key(exponents):
    return (sum(exponents), exponents)


class Polynomial:
    """A multivariate polynomial with exact rational coefficients."""

    __slots__ = ("cs", "terms")

    def __init__(self, cs: CoordinateSystem, terms):
        self.cs = cs
        n = len(cs)
        clean = {}
        for exps, coeff in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for {n} coordinates")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, cs):
        return cls(cs, {})

    @classmethod
    def constant(cls, cs, value) -> "Polynomial":
        return cls(cs, {(0,) * len(cs): Fraction(value)})

    @classmethod
    def one(cls, cs):
        return cls.constant(cs, 1)

    @classmethod
    def variable(cls, cs, name: str) -> "Polynomial":
        exps = [0] * len(cs)
        exps[cs.index(name)] = 1
        return cls(cs, {tuple(exps): Fraction(1)})

    # -- predicates and views ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def leading_term(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def variables(self):
        """Sorted indices of the coordinates that actually occur."""
        seen = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    seen.add(i)
        return sorted(seen)

    # -- ring operations ------------------------------------------------

    def _check_cs(self, other: "Polynomial"):
        if self.cs != other.cs:
            raise ValueError("polynomials built over different coordinate systems")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.cs, other)
        self._check_cs(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, Fraction(0)) + coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        return Polynomial(self.cs, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.cs, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.cs, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_cs(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(exps, Fraction(0)) + c1 * c2
                if acc:
                    terms[exps] = acc
                else:
                    terms.pop(exps, None)
        return Polynomial(self.cs, terms)

    __rmul__ = __mul__

    def scale(self, factor) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero(self.cs)
        return Polynomial(self.cs, {e: c * factor for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("polynomial powers must be nonnegative")
        result = Polynomial.one(self.cs)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.cs == other.cs
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.cs, frozenset(self.terms.items())))

    # -- calculus ---------------------------------------------------------

    def partial(self, var: int) -> "Polynomial":
        terms = {}
        for exps, coeff in self.terms.items():
            e = exps[var]
            if e:
                new = list(exps)
                new[var] = e - 1
                key = tuple(new)
                acc = terms.get(key, Fraction(0)) + coeff * e
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
        return Polynomial(self.cs, terms)

    def evaluate(self, point) -> Fraction:
        """Evaluate at a map coordinate-name -> Fraction."""
        values = []
        for name in self.cs.names:
            if name not in point:
                raise MissingCoordinateError(f"point does not assign {name!r}")
            values.append(Fraction(point[name]))
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v**e
            total += term
        return total

    # -- content and normalization ----------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with self/c a primitive integer polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no content")
        num = 0
        den = 1
        for coeff in self.terms.values():
            num = int_gcd(num, coeff.numerator)
            den = int_lcm(den, coeff.denominator)
        return Fraction(num, den)

    def primitive_normalized(self) -> "Polynomial":
        """Primitive integer-coefficient scaling with positive leading coefficient."""
        if not self.terms:
            return self
        p = self.scale(1 / self.rational_content())
        if p.leading_term()[1] < 0:
            p = -p
        return p

    # -- printing -----------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def _monomial_str(self, exps) -> str:
        parts = []
        for name, e in zip(self.cs.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for i, (exps, coeff) in enumerate(self.sorted_terms()):
            mono = self._monomial_str(exps)
            mag = abs(coeff)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                chunks.append(f"-{body}" if coeff < 0 else body)
            else:
                chunks.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(chunks)

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# Multivariate gcd via content/primitive-part recursion and a primitive PRS.
# ---------------------------------------------------------------------------


def divexact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact division f/g; raises ValueError if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    cs = f.cs
    quotient = {}
    rem = f
    g_exps, g_coeff = g.leading_term()
    while not rem.is_zero():
        r_exps, r_coeff = rem.leading_term()
        q_exps = tuple(a - b for a, b in zip(r_exps, g_exps))
        if any(e < 0 for e in q_exps):
            raise ValueError("inexact polynomial division")
        q_coeff = r_coeff / g_coeff
        quotient[q_exps] = quotient.get(q_exps, Fraction(0)) + q_coeff
        rem = rem - Polynomial(cs, {q_exps: q_coeff}) * g
    return Polynomial(cs, quotient)


def _to_univariate(f: Polynomial, var: int):
    """View f as univariate in `var` with Polynomial coefficients (same cs)."""
    coeffs = {}
    for exps, coeff in f.terms.items():
        d = exps[var]
        rest = list(exps)
        rest[var] = 0
        key = tuple(rest)
        bucket = coeffs.setdefault(d, {})
        bucket[key] = bucket.get(key, Fraction(0)) + coeff
    return {d: Polynomial(f.cs, t) for d, t in coeffs.items() if any(t.values())}


def _from_univariate(cs, var, coeffs):
    terms = {}
    for d, poly in coeffs.items():
        for exps, coeff in poly.terms.items():
            e = list(exps)
            e[var] = d
            terms[tuple(e)] = coeff
    return Polynomial(cs, terms)


def _shift(poly: Polynomial, var: int, degree: int) -> Polynomial:
    """Multiply by var**degree."""
    terms = {}
    for exps, coeff in poly.terms.items():
        e = list(exps)
        e[var] += degree
        terms[tuple(e)] = coeff
    return Polynomial(poly.cs, terms)


def _content_wrt(f: Polynomial, var: int) -> Polynomial:
    """gcd of the univariate coefficients of f with respect to var."""
    univ = _to_univariate(f, var)
    content = Polynomial.zero(f.cs)
    for poly in univ.values():
        content = poly_gcd(content, poly)
        if content.is_constant() and not content.is_zero():
            break
    return content

def _prem(f: Polynomial, g: Polynomial, var: int) -> Polynomial:
    """Pseudo-remainder of f by g, both viewed as univariate in var."""
    dg = g.degree_in(var)
    lc_g = _to_univariate(g, var)[dg]
    rem = f
    while not rem.is_zero() and rem.degree_in(var) >= dg:
        dr = rem.degree_in(var)
        lc_r = _to_univariate(rem, var)[dr]
        rem = lc_g * rem - _shift(lc_r, var, dr - dg) * g
    return rem


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """gcd over Q, normalized primitive-integer with positive leading coefficient.

    Any nonzero rational is a unit, so the gcd of two nonzero constants (or of
    a constant and anything) is 1.
    """
    if f.is_zero():
        return g.primitive_normalized()
    if g.is_zero():
        return f.primitive_normalized()
    if f.is_constant() or g.is_constant():
        return Polynomial.one(f.cs)

    var = min(set(f.variables()) | set(g.variables()))
    if f.degree_in(var) == 0 or g.degree_in(var) == 0:
        # var occurs in only one argument: gcd divides the other's content
        if f.degree_in(var) == 0:
            return poly_gcd(f, _content_wrt(g, var))
        return poly_gcd(_content_wrt(f, var), g)

    cont_f = _content_wrt(f, var)
    cont_g = _content_wrt(g, var)
    cont = poly_gcd(cont_f, cont_g)
    a = divexact(f, cont_f).primitive_normalized()
    b = divexact(g, cont_g).primitive_normalized()
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a

    # primitive PRS: keep remainders primitive with respect to var
    while not b.is_zero():
        rem = _prem(a, b, var)
        a = b
        if rem.is_zero():
            b = rem
        else:
            b = divexact(rem, _content_wrt(rem, var)).primitive_normalized()
    pp = divexact(a, _content_wrt(a, var)).primitive_normalized()
    return (cont * pp).primitive_normalized()
