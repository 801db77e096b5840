"""Sparse multivariate polynomials over exact rationals.

These are the fully symbolic entries: generic skew matrices with entries
like a_1_2, and polynomials in a formal parameter t.  A monomial is a
tuple of (variable, exponent) pairs sorted by variable name; a polynomial
maps monomials to nonzero Fraction coefficients.  A dense representation
would explode for the generic 4x4 Pfaffian over six variables.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import MatrixFormatError
from .rings import RationalRing, Ring, _check_divisor

_COEFF_RE = re.compile(r"\d+(/\d+)?\Z")
_FACTOR_RE = re.compile(r"([A-Za-z_]\w*)(?:\^(\d+))?\Z")

_EMPTY = ()


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _coerce(value):
    if isinstance(value, MultivariatePolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return MultivariatePolynomial.constant(Fraction(value))
    return NotImplemented


class MultivariatePolynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    cleaned[mono] = coeff
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def constant(cls, value):
        return cls({_EMPTY: Fraction(value)})

    @classmethod
    def variable(cls, name, exponent=1):
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        if exponent == 0:
            return cls.constant(1)
        return cls({((name, exponent),): Fraction(1)})

    def variables(self):
        names = set()
        for mono in self.terms:
            for v, _ in mono:
                names.add(v)
        return names

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    def constant_term(self):
        return self.terms.get(_EMPTY, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return MultivariatePolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return MultivariatePolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return MultivariatePolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultivariatePolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scalar_mul(self, value):
        value = Fraction(value)
        return MultivariatePolynomial(
            {m: c * value for m, c in self.terms.items()}
        )

    def _sorted_terms(self):
        # graded order, highest total degree first, then lexicographic;
        # deterministic so text output is usable in golden tests
        return sorted(
            self.terms.items(), key=lambda mc: (-sum(e for _, e in mc[0]), mc[0])
        )

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for mono, coeff in self._sorted_terms():
            factors = ["%s^%d" % (v, e) if e > 1 else v for v, e in mono]
            magnitude = abs(coeff)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            body = "*".join(factors)
            if not chunks:
                chunks.append("-" + body if coeff < 0 else body)
            else:
                chunks.append(("-" if coeff < 0 else "+") + body)
        return "".join(chunks)

    def __repr__(self):
        return "MultivariatePolynomial(%s)" % self


def parse_polynomial(text):
    """Parse the canonical text form: '+'/'-'-joined terms of '*'-joined
    factors with '^' exponents, e.g. 'a_1_2*a_3_4-2/3*t^2+1'."""
    s = text.strip().replace(" ", "")
    if not s:
        raise MatrixFormatError("empty polynomial literal")
    if s == "0":
        return MultivariatePolynomial()
    # split into signed chunks; signs only ever occur between terms or first
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise MatrixFormatError("bad polynomial literal %r" % text)
    result = MultivariatePolynomial()
    for chunk in chunks:
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        if not chunk:
            raise MatrixFormatError("bad polynomial literal %r" % text)
        coeff = Fraction(sign)
        mono = {}
        for factor in chunk.split("*"):
            if _COEFF_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise MatrixFormatError(
                    "bad factor %r in polynomial literal %r" % (factor, text)
                )
            name, exp = m.group(1), int(m.group(2) or 1)
            mono[name] = mono.get(name, 0) + exp
        term = MultivariatePolynomial({tuple(sorted(mono.items())): coeff})
        result = result + term
    return result


def formal_derivative(p, var):
    """Term-by-term derivative with respect to one variable."""
    terms = {}
    for mono, coeff in p.terms.items():
        exps = dict(mono)
        e = exps.get(var)
        if not e:
            continue
        if e == 1:
            del exps[var]
        else:
            exps[var] = e - 1
        new_mono = tuple(sorted(exps.items()))
        terms[new_mono] = terms.get(new_mono, Fraction(0)) + coeff * e
    return MultivariatePolynomial(terms)


def evaluate(p, assignment, ring=None):
    """Homomorphic evaluation; assignment must cover every variable of p.

    The target ring defaults to the rationals; pass another Ring to
    evaluate into it (values in ``assignment`` must then be its elements).
    """
    if ring is None:
        ring = RationalRing()
    missing = p.variables() - set(assignment)
    if missing:
        raise ValueError("assignment missing variables: %s" % sorted(missing))
    total = ring.zero()
    for mono, coeff in p.terms.items():
        acc = ring.from_fraction(coeff)
        for v, e in mono:
            value = assignment[v]
            for _ in range(e):
                acc = acc * value
        total = total + acc
    return total


class PolynomialRing(Ring):
    """Multivariate polynomials as a matrix-entry ring (no fixed variable
    set: operands over different variables combine over the union)."""

    tag = "polynomial"

    def zero(self):
        return MultivariatePolynomial()

    def one(self):
        return MultivariatePolynomial.constant(1)

    def from_int(self, k):
        return MultivariatePolynomial.constant(k)

    def from_fraction(self, q):
        return MultivariatePolynomial.constant(q)

    def divide_by_integer(self, x, k):
        _check_divisor(k)
        return x.scalar_mul(Fraction(1, k))

    def parse(self, text):
        return parse_polynomial(text)

    def format(self, x):
        return str(x)
