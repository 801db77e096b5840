"""Exterior algebra over a scalar coefficient ring.

Basis terms are strictly increasing index tuples from {1..n}, stored as
bitmasks (bit i-1 <-> covector e_i), so wedging two terms is a couple of
bit operations plus a transposition count.  Arbitrary-degree elements can
be built (one needs covectors to assemble 2-forms), but only the even
part is commutative, and only even elements are admitted as matrix
entries: that even subalgebra is the coefficient ring used for Euler
forms.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import MatrixFormatError, ValidationError
from .rings import RationalRing, Ring, _check_divisor

_TERM_RE = re.compile(r"(?:(?P<coeff>[^*\s]+)\s*\*\s*)?(?P<basis>e_\d+(?:\^e_\d+)*)\Z")

_MAX_DIM = 64


def _merge_sign(mask_a, mask_b):
    """Sign of sorting the concatenation e_A ^ e_B into increasing order:
    (-1) to the number of pairs i in A, j in B with j < i."""
    inversions = 0
    x = mask_a
    while x:
        low = x & -x
        inversions += bin(mask_b & (low - 1)).count("1")
        x &= x - 1
    return -1 if inversions & 1 else 1


def _mask_to_indices(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class FormElement:
    """Immutable element of the exterior algebra on n covectors.

    ``terms`` maps bitmasks of basis index sets to nonzero scalar
    coefficients (Fractions by default; floats work too).  ``*`` is the
    wedge product.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=None):
        if not 0 <= dim <= _MAX_DIM:
            raise ValueError("dimension must be between 0 and %d" % _MAX_DIM)
        cleaned = {}
        if terms:
            limit = 1 << dim
            for mask, coeff in terms.items():
                if not 0 <= mask < limit:
                    raise ValueError("basis index out of range for dimension %d" % dim)
                if coeff:
                    cleaned[mask] = coeff
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("forms are immutable")

    @classmethod
    def scalar(cls, dim, value):
        return cls(dim, {0: value})

    @classmethod
    def covector(cls, dim, index):
        """Basis covector e_index, 1-based."""
        if not 1 <= index <= dim:
            raise ValueError("covector index %d out of range" % index)
        return cls(dim, {1 << (index - 1): Fraction(1)})

    @classmethod
    def basis_term(cls, dim, indices, coeff=Fraction(1)):
        """coeff * e_i1 ^ ... ^ e_ik for strictly increasing indices."""
        mask = 0
        last = 0
        for i in indices:
            if not last < i <= dim:
                raise ValueError("indices must be strictly increasing and in range")
            mask |= 1 << (i - 1)
            last = i
        return cls(dim, {mask: coeff})

    def _coerce(self, value):
        if isinstance(value, FormElement):
            if value.dim != self.dim:
                raise ValueError(
                    "dimension mismatch: %d vs %d" % (self.dim, value.dim)
                )
            return value
        if isinstance(value, (int, Fraction, float)):
            return FormElement.scalar(self.dim, value)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mask, coeff in other.terms.items():
            terms[mask] = terms.get(mask, 0) + coeff
        return FormElement(self.dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return FormElement(self.dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        """Wedge product, bilinear over the basis terms; e_I ^ e_J = 0
        whenever I and J share an index."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma & mb:
                    continue
                mask = ma | mb
                coeff = ca * cb
                if _merge_sign(ma, mb) < 0:
                    coeff = -coeff
                terms[mask] = terms.get(mask, 0) + coeff
        return FormElement(self.dim, terms)

    __rmul__ = __mul__

    def scalar_mul(self, value):
        return FormElement(self.dim, {m: c * value for m, c in self.terms.items()})

    def grades(self):
        return {bin(m).count("1") for m in self.terms}

    def is_even(self):
        return all(g % 2 == 0 for g in self.grades())

    def is_homogeneous(self, k):
        return all(g == k for g in self.grades())

    def grade_project(self, k):
        """Keep only the terms of degree k."""
        if not 0 <= k <= self.dim:
            raise ValueError("degree %d out of range" % k)
        return FormElement(
            self.dim,
            {m: c for m, c in self.terms.items() if bin(m).count("1") == k},
        )

    def top_coefficient(self):
        """Coefficient of e_1 ^ ... ^ e_n (zero if absent)."""
        return self.terms.get((1 << self.dim) - 1, Fraction(0))

    def _sorted_terms(self):
        return sorted(
            ((_mask_to_indices(m), c) for m, c in self.terms.items())
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for indices, coeff in self._sorted_terms():
            if indices:
                basis = "^".join("e_%d" % i for i in indices)
                parts.append("%s * %s" % (coeff, basis))
            else:
                parts.append(str(coeff))
        return " + ".join(parts)

    def __repr__(self):
        return "FormElement(%d, %s)" % (self.dim, self)


def wedge(a, b):
    return a * b


def grade_project(a, k):
    return a.grade_project(k)


def top_coefficient(a):
    return a.top_coefficient()


class ExteriorRing(Ring):
    """The even-degree subalgebra of the exterior algebra on ``dim``
    covectors, as a matrix-entry ring.  Coefficients live in ``scalar``
    (exact rationals by default)."""

    def __init__(self, dim, scalar=None):
        self.dim = dim
        self.scalar = scalar if scalar is not None else RationalRing()
        self.tag = "exterior:%d" % dim
        self.exact = self.scalar.exact

    def zero(self):
        return FormElement(self.dim)

    def one(self):
        return FormElement.scalar(self.dim, self.scalar.one())

    def from_int(self, k):
        return FormElement.scalar(self.dim, self.scalar.from_int(k))

    def divide_by_integer(self, x, k):
        _check_divisor(k)
        return FormElement(
            self.dim,
            {m: self.scalar.divide_by_integer(c, k) for m, c in x.terms.items()},
        )

    def admit(self, x):
        if not isinstance(x, FormElement) or x.dim != self.dim:
            raise ValidationError("entry is not a form of dimension %d" % self.dim)
        if not x.is_even():
            raise ValidationError(
                "odd-degree form %s is not admissible as a matrix entry; "
                "only the even subalgebra is commutative" % x
            )
        return x

    def parse(self, text):
        s = text.strip()
        if not s:
            raise MatrixFormatError("empty form literal")
        if s == "0":
            return self.zero()
        total = self.zero()
        for raw in s.split(" + "):
            raw = raw.strip()
            m = _TERM_RE.match(raw)
            if m:
                coeff_text = m.group("coeff")
                coeff = (
                    self.scalar.one()
                    if coeff_text is None
                    else self.scalar.parse(coeff_text)
                )
                term = FormElement.scalar(self.dim, coeff)
                for part in m.group("basis").split("^"):
                    index = int(part[2:])
                    if not 1 <= index <= self.dim:
                        raise MatrixFormatError(
                            "covector index out of range in %r" % text
                        )
                    term = term * FormElement.covector(self.dim, index)
            else:
                term = FormElement.scalar(self.dim, self.scalar.parse(raw))
            total = total + term
        return total

    def format(self, x):
        if not isinstance(x, FormElement):
            raise TypeError("expected a FormElement")
        if x.terms and isinstance(next(iter(x.terms.values())), float):
            return " + ".join(
                "%s * %s" % (repr(c), "^".join("e_%d" % i for i in idx))
                if idx
                else repr(c)
                for idx, c in x._sorted_terms()
            )
        return str(x)
