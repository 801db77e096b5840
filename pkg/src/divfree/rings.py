"""Scalar rings: the commutative Q-algebra contract and its concrete instances.

Every algorithm in this package is generic over a ring of matrix entries.
Elements are ordinary Python objects implementing ``+``, ``-``, ``*``,
unary ``-``, ``==`` and ``bool()`` (falsy exactly for zero).  A ``Ring``
object supplies what the elements alone cannot: the constants, the
embedding of integers, exact division by nonzero integers, and the text
form used by the matrix file format.

Division by nonzero integers is the only division the algorithms ever
need, which is what keeps polynomial and exterior-algebra entries
admissible.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import InternalConsistencyError, MatrixFormatError, ValidationError

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")
_INTEGER_RE = re.compile(r"[+-]?\d+\Z")


class Ring:
    """Descriptor of a commutative Q-algebra of matrix entries.

    ``exact`` distinguishes rings where equality is literal (rationals,
    polynomials, forms) from the machine-float ring, where comparisons
    must be tolerance-based and the tolerance is always an explicit
    caller parameter.
    """

    tag: str = "abstract"
    exact: bool = True

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        """Embed the integer k (a ring homomorphism from Z)."""
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        return self.divide_by_integer(self.from_int(q.numerator), q.denominator)

    def divide_by_integer(self, x, k: int):
        """Return y with k*y == x.  k must be a nonzero integer."""
        raise NotImplementedError

    def admit(self, x):
        """Vet x for use as a matrix entry; return it or raise ValidationError."""
        return x

    def parse(self, text: str):
        """Inverse of format(); raises MatrixFormatError on bad literals."""
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def __repr__(self):
        return "<ring %s>" % self.tag


def _check_divisor(k):
    if not isinstance(k, int) or k == 0:
        raise ValueError("divisor must be a nonzero integer, got %r" % (k,))


class RationalRing(Ring):
    """Exact rationals: arbitrary-precision, always in lowest terms."""

    tag = "rational"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def divide_by_integer(self, x, k):
        _check_divisor(k)
        return x / k

    def parse(self, text):
        if not _RATIONAL_RE.match(text):
            raise MatrixFormatError("bad rational literal %r" % text)
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise MatrixFormatError("zero denominator in %r" % text) from None

    def format(self, x):
        return str(x)


class IntegerRing(RationalRing):
    """Arbitrary-precision integers viewed inside their rationalization.

    All arithmetic happens on exact rationals; values are demoted back to
    integers on extraction, and a result with a denominator other than 1
    is treated as an internal bug (an integer matrix cannot produce a
    non-integral characteristic-polynomial coefficient, Pfaffian, or
    adjugate entry).
    """

    tag = "integer"

    def parse(self, text):
        if not _INTEGER_RE.match(text):
            raise MatrixFormatError("bad integer literal %r" % text)
        return Fraction(int(text))

    def format(self, x):
        if x.denominator != 1:
            raise InternalConsistencyError(
                "non-integral value %s extracted from the integer ring" % x
            )
        return str(x.numerator)


class FloatRing(Ring):
    """64-bit machine floats, the numeric benchmarking substrate.

    Not exact: downstream checks report residual magnitudes instead of
    raising, and every comparison tolerance is a caller parameter.
    """

    tag = "float"
    exact = False

    def zero(self):
        return 0.0

    def one(self):
        return 1.0

    def from_int(self, k):
        return float(k)

    def from_fraction(self, q):
        return q.numerator / q.denominator

    def divide_by_integer(self, x, k):
        _check_divisor(k)
        return x / k

    def admit(self, x):
        if not math.isfinite(x):
            raise ValidationError("non-finite float %r is not admissible" % x)
        return x

    def parse(self, text):
        try:
            value = float(text)
        except ValueError:
            raise MatrixFormatError("bad float literal %r" % text) from None
        return self.admit(value)

    def format(self, x):
        # repr() of a float round-trips exactly in Python 3
        return repr(float(x))


def ring_axiom_check(samples, eq=None):
    """Check commutativity, associativity and distributivity on all triples.

    Returns a list of human-readable failure descriptions (empty means
    pass).  Works on raw elements through their operators, so it applies
    to every ring instance, including the even part of an exterior
    algebra; feeding it odd-degree forms demonstrates the commutativity
    failure that keeps them out of matrix entries.
    """
    samples = list(samples)
    if len(samples) < 3:
        raise ValueError("need at least 3 sample elements")
    if eq is None:
        eq = lambda a, b: a == b
    failures = []
    for i, a in enumerate(samples):
        for j, b in enumerate(samples):
            if not eq(a * b, b * a):
                failures.append("commutativity: samples %d, %d" % (i, j))
            if not eq(a + b, b + a):
                failures.append("additive commutativity: samples %d, %d" % (i, j))
            for k, c in enumerate(samples):
                if not eq((a * b) * c, a * (b * c)):
                    failures.append("associativity: samples %d, %d, %d" % (i, j, k))
                if not eq((a + b) + c, a + (b + c)):
                    failures.append(
                        "additive associativity: samples %d, %d, %d" % (i, j, k)
                    )
                if not eq(a * (b + c), a * b + a * c):
                    failures.append("distributivity: samples %d, %d, %d" % (i, j, k))
    return failures
