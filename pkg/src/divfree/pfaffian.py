"""Pfaffians of skew-symmetric matrices, three ways.

The production algorithm mirrors the characteristic-polynomial recursion,
applied to pf(tJ + A) for a fixed skew J with J^2 = -I:

    N_1 = -pf(J) J,   c_k = tr(A N_k)/(2k),   N_{k+1} = J A N_k - c_k J

c_m is the Pfaffian (n = 2m) and N_m is the Pfaff-adjugate, the skew
matrix with A Padj(A) = pf(A) I.  Multiplying by J on the left is a row
permutation with sign flips, so each iteration costs one real matrix
product.

Two independent oracles cross-check it: the signed sum over all perfect
matchings (the definition; double-factorial growth, capped) and the
Laplace-style expansion along a pivot row (cached on index subsets).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError, ValidationError
from .matrices import (
    DenseMatrix,
    SkewMatrix,
    j_matching_pairs,
    j_matrix,
    left_mul_by_j,
    remove_row_col_pair,
)
from .polynomials import MultivariatePolynomial, PolynomialRing, formal_derivative
from .rings import FloatRing, RationalRing

MATCHINGS_SIZE_CAP = 14
LAPLACE_SIZE_CAP = 16


@dataclass(frozen=True)
class PerfectMatching:
    """A partition of {1..n} into pairs (i, j) with i < j, together with
    the sign of the permutation [i_1, j_1, ..., i_m, j_m].  The sign does
    not depend on the order in which the pairs are listed."""

    pairs: tuple
    sign: int

    @classmethod
    def from_pairs(cls, pairs):
        pairs = tuple((int(i), int(j)) for i, j in pairs)
        _validate_pairs(pairs)
        return cls(pairs, _pairs_sign(pairs))


def _validate_pairs(pairs):
    seen = set()
    for i, j in pairs:
        if i >= j:
            raise ValueError("each pair must be ordered (i < j), got (%d, %d)" % (i, j))
        seen.add(i)
        seen.add(j)
    n = 2 * len(pairs)
    if len(seen) != n or seen != set(range(1, n + 1)):
        raise ValueError("pairs must partition {1..%d}" % n)


def _pairs_sign(pairs):
    seq = [x for pair in pairs for x in pair]
    inversions = 0
    for p in range(len(seq)):
        for q in range(p + 1, len(seq)):
            if seq[p] > seq[q]:
                inversions += 1
    return -1 if inversions & 1 else 1


def matching_sign(matching):
    """Permutation sign of a matching; accepts a PerfectMatching or a
    bare pair sequence (validated either way)."""
    pairs = matching.pairs if isinstance(matching, PerfectMatching) else tuple(
        (int(i), int(j)) for i, j in matching
    )
    _validate_pairs(pairs)
    return _pairs_sign(pairs)


def enumerate_matchings(n):
    """Yield every perfect matching of {1..n}, pairing the smallest
    unmatched index with each larger one in turn."""
    if n % 2:
        raise ValueError("perfect matchings need an even ground set")

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for pos in range(1, len(remaining)):
            rest = remaining[1:pos] + remaining[pos + 1 :]
            for tail in rec(rest):
                yield ((first, remaining[pos]),) + tail

    for pairs in rec(tuple(range(1, n + 1))):
        yield PerfectMatching.from_pairs(pairs)


def pf_of_j(j_form, n):
    """pf of a structured J, read off its block layout: only one matching
    touches nonzero entries (all equal to 1), so the Pfaffian is that
    matching's permutation sign."""
    if n == 0:
        return 1
    return matching_sign(j_matching_pairs(j_form, n))


@dataclass(frozen=True)
class PfaffianResult:
    """pf(A) plus the recursion by-products: the Pfaff-adjugate N_m, the
    coefficients [c_0..c_m] of pf(tJ + A) (c_0 = pf(J), c_m = pf(A)), and
    the final residual A N_m - c_m I."""

    value: object
    pfaff_adjugate: DenseMatrix | None
    psi_coefficients: list | None
    j_form: str
    odd_dimension: bool = False
    residual: DenseMatrix | None = None
    residual_max_abs: float | None = None


def _ensure_skew(a):
    if isinstance(a, SkewMatrix):
        return a
    if not isinstance(a, DenseMatrix):
        raise TypeError("expected a matrix")
    if not a.ring.exact:
        raise ValidationError(
            "float matrices must be validated with an explicit tolerance first "
            "(SkewMatrix.validated)"
        )
    return SkewMatrix.validated(a)


def pfaffian_fl(a, j_form="standard"):
    """Pfaffian by the division-free recursion; works over any ring with
    exact division by integers, including polynomials and even-degree
    forms.  Odd sizes return 0 (flagged) since the determinant of an odd
    skew matrix vanishes."""
    a = _ensure_skew(a)
    ring, n = a.ring, a.n
    if n % 2:
        return PfaffianResult(ring.zero(), None, None, j_form, odd_dimension=True)
    if n == 0:
        empty = DenseMatrix(ring, [])
        return PfaffianResult(ring.one(), empty, [ring.one()], j_form,
                              residual=empty,
                              residual_max_abs=None if ring.exact else 0.0)
    if isinstance(ring, FloatRing):
        return _pfaffian_fl_float(a, j_form)

    m = n // 2
    s = pf_of_j(j_form, n)
    j = j_matrix(j_form, ring, n)
    identity = DenseMatrix.identity(ring, n)
    coefficients = [ring.from_int(s)]
    nk = j.scalar_mul(ring.from_int(-s))
    mk = None
    for k in range(1, m + 1):
        mk = a @ nk
        ck = ring.divide_by_integer(mk.trace(), 2 * k)
        coefficients.append(ck)
        if k < m:
            # J (A N_k) by row swaps: no ring products
            nk = left_mul_by_j(j_form, mk) - j.scalar_mul(ck)
    residual = mk - identity.scalar_mul(coefficients[m])
    if ring.exact and not residual.is_zero():
        raise InternalConsistencyError(
            "nonzero Pfaffian residual: the entry ring violates the "
            "Q-algebra contract"
        )
    return PfaffianResult(
        coefficients[m],
        nk,
        coefficients,
        j_form,
        residual=residual,
        residual_max_abs=None if ring.exact else residual.max_abs(),
    )


def _pfaffian_fl_float(a, j_form):
    import numpy as np

    ring, n = a.ring, a.n
    m = n // 2
    s = float(pf_of_j(j_form, n))
    mat = np.array(a.to_rows(), dtype=float)
    jnp = np.array(j_matrix(j_form, ring, n).to_rows(), dtype=float)
    h = n // 2

    def jmul(x):
        out = np.empty_like(x)
        if j_form == "standard":
            out[0::2] = x[1::2]
            out[1::2] = -x[0::2]
        else:
            out[:h] = x[h:]
            out[h:] = -x[:h]
        return out

    coefficients = [s]
    nk = -s * jnp
    mk = None
    for k in range(1, m + 1):
        mk = mat @ nk
        ck = mk.trace() / (2 * k)
        coefficients.append(float(ck))
        if k < m:
            nk = jmul(mk) - ck * jnp
    residual = mk - coefficients[m] * np.eye(n)
    return PfaffianResult(
        coefficients[m],
        DenseMatrix(ring, nk.tolist()),
        coefficients,
        j_form,
        residual=DenseMatrix(ring, residual.tolist()),
        residual_max_abs=float(np.abs(residual).max()),
    )


def pfaffian_matchings(a, allow_large=False):
    """The definition: sum of sign(P) times the entry product over all
    perfect matchings P.  (n-1)!! terms, so sizes above
    MATCHINGS_SIZE_CAP are refused unless allow_large is set.  This is
    the reference oracle for everything else in the module."""
    a = _ensure_skew(a)
    ring, n = a.ring, a.n
    if n % 2:
        return ring.zero()
    if n > MATCHINGS_SIZE_CAP and not allow_large:
        raise ValidationError(
            "matchings enumeration for n=%d exceeds the cap of %d "
            "((n-1)!! growth); pass allow_large to override"
            % (n, MATCHINGS_SIZE_CAP)
        )
    rows = a.to_rows()
    zero = ring.zero()
    one = ring.one()

    def rec(remaining):
        if not remaining:
            return one
        first = remaining[0]
        arow = rows[first]
        total = zero
        for pos in range(1, len(remaining)):
            x = arow[remaining[pos]]
            if not x:
                continue
            sub = rec(remaining[1:pos] + remaining[pos + 1 :])
            if not sub:
                continue
            term = x * sub
            # pairing across pos-1 intermediate indices flips the sign
            # that many times
            if (pos - 1) & 1:
                term = -term
            total = total + term
        return total

    return rec(tuple(range(n)))


def pfaffian_laplace(a, pivot_row=1, allow_large=False):
    """Expansion along a pivot row: pf(A) = sum_j +/- a_ij pf(A<i,j>),
    recursing to the empty matrix (pf = 1).  The value is independent of
    the pivot.  Sub-Pfaffians are cached on the surviving index subset,
    which keeps the oracle usable up to the bench cap."""
    a = _ensure_skew(a)
    ring, n = a.ring, a.n
    if n % 2:
        return ring.zero()
    if n == 0:
        return ring.one()
    if n > LAPLACE_SIZE_CAP and not allow_large:
        raise ValidationError(
            "Laplace expansion for n=%d exceeds the cap of %d; "
            "pass allow_large to override" % (n, LAPLACE_SIZE_CAP)
        )
    if not 1 <= pivot_row <= n:
        raise ValueError("pivot row %d out of range" % pivot_row)
    rows = a.to_rows()
    zero = ring.zero()
    memo = {0: ring.one()}

    def rank_in(mask, bit_index):
        return bin(mask & ((1 << bit_index) - 1)).count("1") + 1

    def expand(mask, i_abs):
        rel_i = rank_in(mask, i_abs)
        arow = rows[i_abs]
        total = zero
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            j_abs = low.bit_length() - 1
            if j_abs == i_abs:
                continue
            x = arow[j_abs]
            if not x:
                continue
            sub = pf_mask(mask ^ (1 << i_abs) ^ low)
            if not sub:
                continue
            term = x * sub
            exponent = rel_i + rank_in(mask, j_abs) + (1 if j_abs > i_abs else 0)
            if exponent & 1:
                term = -term
            total = total + term
        return total

    def pf_mask(mask):
        value = memo.get(mask)
        if value is None:
            value = expand(mask, (mask & -mask).bit_length() - 1)
            memo[mask] = value
        return value

    return expand((1 << n) - 1, pivot_row - 1)


def pfaff_adjugate(a, j_form="standard"):
    """N_m from the recursion: the skew matrix with A Padj(A) = pf(A) I
    and pf(A) Padj(A) = adj(A)."""
    result = pfaffian_fl(a, j_form)
    if result.odd_dimension:
        raise ValidationError("the Pfaff-adjugate needs an even size")
    return result.pfaff_adjugate


def pfaff_adjugate_by_definition(a):
    """Entrywise reference: b_ij = +/- pf(A with rows/cols i, j removed).
    Exponential-time; for cross-checking the recursion at small sizes."""
    a = _ensure_skew(a)
    ring, n = a.ring, a.n
    if n % 2:
        raise ValidationError("the Pfaff-adjugate needs an even size")
    zero = ring.zero()
    rows = [[zero] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            sub = pfaffian_laplace(remove_row_col_pair(a, i, j))
            entry = sub if (i + j) % 2 == 0 else -sub
            rows[i - 1][j - 1] = entry
            rows[j - 1][i - 1] = -entry
    return DenseMatrix(ring, rows)


def jacobi_pfaffian_check(a, j_form="standard", var="t"):
    """Verify d/dt pf(A(t)) = (1/2) tr(A'(t) Padj(A(t))) symbolically for
    A(t) = tJ + A, computing both sides by independent routes (matchings
    plus formal derivative on the left, the entrywise Pfaff-adjugate on
    the right).  Diagnostic: returns True/False."""
    a = _ensure_skew(a)
    ring, n = a.ring, a.n
    if n % 2 or n > 8:
        raise ValidationError("the symbolic check runs for even n <= 8")
    poly_ring = PolynomialRing()
    if isinstance(ring, PolynomialRing):
        if any(var in x.variables() for row in a.to_rows() for x in row):
            raise ValueError("entries already use the variable %r" % var)
        a_poly = a.map_entries(poly_ring, lambda x: x)
    elif isinstance(ring, RationalRing):
        a_poly = a.map_entries(poly_ring, MultivariatePolynomial.constant)
    else:
        raise ValidationError(
            "the symbolic check needs rational, integer or polynomial entries"
        )
    if n == 0:
        return True
    j_poly = j_matrix(j_form, poly_ring, n)
    t = MultivariatePolynomial.variable(var)
    a_t = SkewMatrix.validated(j_poly.scalar_mul(t) + a_poly)
    lhs = formal_derivative(pfaffian_matchings(a_t), var)
    padj_t = pfaff_adjugate_by_definition(a_t)
    rhs = poly_ring.divide_by_integer((j_poly @ padj_t).trace(), 2)
    return lhs == rhs
