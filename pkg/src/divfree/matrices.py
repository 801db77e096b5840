"""Dense square matrices generic over a ring, plus the structured pieces
the recursions consume: the identity, the block-diagonal and block
anti-diagonal J forms, cheap left multiplication by J, and row/column
pair removal for Laplace expansions.

Indices follow the usual mathematical convention (1-based) in the
operations that carry sign conventions: remove_row_col_pair frames and
matching pairs.  Raw entry access via m[i, j] is 0-based like every other
Python container.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import MatrixFormatError, ValidationError
from .exterior import ExteriorRing
from .polynomials import PolynomialRing
from .rings import FloatRing, IntegerRing, RationalRing

J_FORMS = ("standard", "alternative")


class DenseMatrix:
    """Row-major n x n matrix over one ring instance.

    Matrices are immutable after construction.  The product uses a
    deterministic ascending-inner-index summation so exact results are
    reproducible; exact zero factors are skipped, which never changes the
    result but matters a lot for sparse operands over expensive rings.
    """

    __slots__ = ("ring", "n", "_rows")

    def __init__(self, ring, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        for r in rows:
            for j, x in enumerate(r):
                r[j] = ring.admit(x)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    @classmethod
    def identity(cls, ring, n):
        zero, one = ring.zero(), ring.one()
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring, n):
        zero = ring.zero()
        return cls(ring, [[zero] * n for _ in range(n)])

    @classmethod
    def from_ints(cls, ring, rows):
        """Build from integer entries through the ring's Z-embedding."""
        return cls(ring, [[ring.from_int(x) for x in r] for r in rows])

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def row(self, i):
        return list(self._rows[i])

    def to_rows(self):
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (
            self.ring.tag == other.ring.tag
            and self.n == other.n
            and self._rows == other._rows
        )

    def __matmul__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if self.n != other.n or self.ring.tag != other.ring.tag:
            raise ValueError("dimension or ring mismatch in matrix product")
        if isinstance(self.ring, FloatRing):
            return self._matmul_float(other)
        if isinstance(self.ring, RationalRing):
            return self._matmul_rational(other)
        return self._matmul_generic(other)

    def _matmul_generic(self, other):
        n = self.n
        ring = self.ring
        zero = ring.zero()
        bcols = [[other._rows[k][j] for k in range(n)] for j in range(n)]
        out = []
        for i in range(n):
            arow = self._rows[i]
            out_row = []
            for j in range(n):
                bcol = bcols[j]
                acc = zero
                for k in range(n):
                    x = arow[k]
                    if not x:
                        continue
                    y = bcol[k]
                    if not y:
                        continue
                    acc = acc + x * y
                out_row.append(acc)
            out.append(out_row)
        return DenseMatrix(ring, out)

    def _matmul_rational(self, other):
        # lift both factors to integer matrices over a common denominator:
        # plain int arithmetic is several times faster than Fraction ops
        # and the result is exact either way
        n = self.n
        a_int, da = _lift_to_ints(self._rows)
        b_int, db = _lift_to_ints(other._rows)
        den = da * db
        bcols = list(zip(*b_int))
        out = []
        for i in range(n):
            arow = a_int[i]
            out_row = []
            for j in range(n):
                bcol = bcols[j]
                acc = 0
                for k in range(n):
                    x = arow[k]
                    if x:
                        acc += x * bcol[k]
                # Fraction(acc, den) normalizes, so lowest terms are restored
                out_row.append(Fraction(acc, den))
            out.append(out_row)
        return DenseMatrix(self.ring, out)

    def _matmul_float(self, other):
        import numpy as np

        a = np.array(self._rows, dtype=float)
        b = np.array(other._rows, dtype=float)
        return DenseMatrix(self.ring, (a @ b).tolist())

    def __add__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if self.n != other.n or self.ring.tag != other.ring.tag:
            raise ValueError("dimension or ring mismatch in matrix sum")
        return DenseMatrix(
            self.ring,
            [
                [x + y for x, y in zip(r1, r2)]
                for r1, r2 in zip(self._rows, other._rows)
            ],
        )

    def __sub__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return DenseMatrix(self.ring, [[-x for x in r] for r in self._rows])

    def scalar_mul(self, value):
        # exact zeros stay zero without touching the ring multiply
        return DenseMatrix(
            self.ring, [[x * value if x else x for x in r] for r in self._rows]
        )

    def transpose(self):
        return DenseMatrix(self.ring, [list(col) for col in zip(*self._rows)] if self.n else [])

    def trace(self):
        acc = self.ring.zero()
        for i in range(self.n):
            acc = acc + self._rows[i][i]
        return acc

    def is_zero(self):
        return all(not x for r in self._rows for x in r)

    def max_abs(self):
        """Largest absolute entry; float matrices only."""
        return max((abs(x) for r in self._rows for x in r), default=0.0)

    def map_entries(self, ring, fn):
        """Entrywise image in another ring (e.g. promote rationals to
        constant polynomials or degree-0 forms)."""
        return DenseMatrix(ring, [[fn(x) for x in r] for r in self._rows])

    def __repr__(self):
        return "DenseMatrix(%s, n=%d)" % (self.ring.tag, self.n)


def _lift_to_ints(rows):
    den = 1
    for r in rows:
        for x in r:
            d = x.denominator
            if d != 1:
                den = lcm(den, d)
    if den == 1:
        return [[x.numerator for x in r] for r in rows], 1
    return [[x.numerator * (den // x.denominator) for x in r] for r in rows], den


class SkewMatrix(DenseMatrix):
    """A DenseMatrix that has passed skew-symmetry validation.

    Over exact rings validation demands literal equality a_ij == -a_ji and
    a zero diagonal.  Over floats the caller must supply a tolerance
    (never hidden in a global): off-diagonal defects up to the tolerance
    are accepted unchanged, diagonal entries up to it are replaced by
    exact zeros so the validated view has a genuinely zero diagonal.
    """

    @classmethod
    def validated(cls, matrix, tolerance=None):
        ring, n, rows = matrix.ring, matrix.n, matrix.to_rows()
        if ring.exact:
            if tolerance is not None:
                raise ValueError("tolerance applies to float matrices only")
            for i in range(n):
                if rows[i][i] != ring.zero():
                    raise ValidationError("nonzero diagonal entry at (%d, %d)" % (i + 1, i + 1))
                for j in range(i + 1, n):
                    if rows[i][j] != -rows[j][i]:
                        raise ValidationError(
                            "entries (%d, %d) and (%d, %d) violate skew-symmetry"
                            % (i + 1, j + 1, j + 1, i + 1)
                        )
        else:
            if tolerance is None:
                raise ValidationError(
                    "float skew validation requires an explicit tolerance"
                )
            for i in range(n):
                if abs(rows[i][i]) > tolerance:
                    raise ValidationError(
                        "diagonal entry at (%d, %d) exceeds tolerance" % (i + 1, i + 1)
                    )
                rows[i][i] = 0.0
                for j in range(i + 1, n):
                    if abs(rows[i][j] + rows[j][i]) > tolerance:
                        raise ValidationError(
                            "entries (%d, %d) and (%d, %d) violate skew-symmetry "
                            "beyond tolerance" % (i + 1, j + 1, j + 1, i + 1)
                        )
        return cls(ring, rows)

    @classmethod
    def _trusted(cls, ring, rows):
        # for constructions that are skew by construction (J forms,
        # pair removal, explicit symmetrization)
        return cls(ring, rows)

    # scaling and negation preserve skew-symmetry, so keep the certificate
    def scalar_mul(self, value):
        return SkewMatrix._trusted(
            self.ring, [[x * value if x else x for x in r] for r in self._rows]
        )

    def __neg__(self):
        return SkewMatrix._trusted(self.ring, [[-x for x in r] for r in self._rows])


def skew_symmetrize(matrix):
    """(A - A^T)/2 as a validated skew matrix.  Never applied implicitly:
    silently repairing an input would hide caller bugs."""
    ring = matrix.ring
    half_diff = (matrix - matrix.transpose()).map_entries(
        ring, lambda x: ring.divide_by_integer(x, 2)
    )
    return SkewMatrix._trusted(ring, half_diff.to_rows())


def standard_j(ring, n):
    """Block-diagonal J with 2x2 blocks [[0,1],[-1,0]]; J^2 = -I."""
    if n % 2:
        raise ValueError("J is only defined for even sizes, got %d" % n)
    zero, one = ring.zero(), ring.one()
    rows = [[zero] * n for _ in range(n)]
    for k in range(0, n, 2):
        rows[k][k + 1] = one
        rows[k + 1][k] = -one
    return SkewMatrix._trusted(ring, rows)


def alt_j(ring, n):
    """Block anti-diagonal J = [[0, I], [-I, 0]]; J^2 = -I."""
    if n % 2:
        raise ValueError("J is only defined for even sizes, got %d" % n)
    zero, one = ring.zero(), ring.one()
    h = n // 2
    rows = [[zero] * n for _ in range(n)]
    for k in range(h):
        rows[k][h + k] = one
        rows[h + k][k] = -one
    return SkewMatrix._trusted(ring, rows)


def j_matrix(form, ring, n):
    if form == "standard":
        return standard_j(ring, n)
    if form == "alternative":
        return alt_j(ring, n)
    raise ValueError("unknown J form %r" % form)


def j_matching_pairs(form, n):
    """The single perfect matching carrying J's nonzero upper entries,
    as 1-based pairs; its permutation sign is pf(J)."""
    if n % 2:
        raise ValueError("even size required")
    if form == "standard":
        return tuple((k, k + 1) for k in range(1, n, 2))
    if form == "alternative":
        h = n // 2
        return tuple((k, h + k) for k in range(1, h + 1))
    raise ValueError("unknown J form %r" % form)


def left_mul_by_j(form, matrix):
    """J @ matrix computed by row permutation and negation only - no ring
    multiplications, which is what makes the Pfaffian recursion cost one
    real matrix product per iteration."""
    n = matrix.n
    if n % 2:
        raise ValueError("even size required")
    rows = matrix._rows
    out = [None] * n
    if form == "standard":
        for k in range(0, n, 2):
            out[k] = list(rows[k + 1])
            out[k + 1] = [-x for x in rows[k]]
    elif form == "alternative":
        h = n // 2
        for k in range(h):
            out[k] = list(rows[h + k])
            out[h + k] = [-x for x in rows[k]]
    else:
        raise ValueError("unknown J form %r" % form)
    return DenseMatrix(matrix.ring, out)


def remove_row_col_pair(matrix, i, j):
    """The skew matrix with rows and columns i and j removed (1-based)."""
    n = matrix.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("indices out of range")
    if i == j:
        raise ValueError("indices must be distinct")
    if not isinstance(matrix, SkewMatrix):
        raise ValidationError("row/column pair removal expects a validated skew matrix")
    drop = {i - 1, j - 1}
    keep = [k for k in range(n) if k not in drop]
    rows = [[matrix._rows[r][c] for c in keep] for r in keep]
    return SkewMatrix._trusted(matrix.ring, rows)


# --- matrix file format ---------------------------------------------------
#
# line 1: "ring <tag>"   tag in {rational, integer, float, polynomial,
#                        exterior:<n>}
# line 2: "size <n>"
# then n lines of n whitespace-separated entry literals; entries containing
# spaces (exterior forms) are double-quoted.

def ring_from_tag(tag):
    if tag == "rational":
        return RationalRing()
    if tag == "integer":
        return IntegerRing()
    if tag == "float":
        return FloatRing()
    if tag == "polynomial":
        return PolynomialRing()
    if tag.startswith("exterior:"):
        try:
            dim = int(tag.split(":", 1)[1])
        except ValueError:
            raise MatrixFormatError("bad exterior ring tag %r" % tag) from None
        return ExteriorRing(dim)
    raise MatrixFormatError("unknown ring tag %r" % tag)


def _split_row(line):
    import shlex

    try:
        return shlex.split(line)
    except ValueError as exc:
        raise MatrixFormatError("bad row %r: %s" % (line, exc)) from None


def _quote(text):
    if any(ch.isspace() for ch in text):
        return '"%s"' % text
    return text


def parse_matrix(text, ring=None):
    """Parse the text format; pass ring to override the declared tag
    (entry literals are then read by the override ring)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    matrix, rest = _parse_matrix_lines(lines, ring)
    if rest:
        raise MatrixFormatError("trailing content after matrix: %r" % rest[0])
    return matrix


def _parse_matrix_lines(lines, ring=None):
    if len(lines) < 2:
        raise MatrixFormatError("matrix file needs ring and size lines")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "ring":
        raise MatrixFormatError("first line must be 'ring <tag>', got %r" % lines[0])
    if ring is None:
        ring = ring_from_tag(head[1])
    size = lines[1].split()
    if len(size) != 2 or size[0] != "size":
        raise MatrixFormatError("second line must be 'size <n>', got %r" % lines[1])
    try:
        n = int(size[1])
    except ValueError:
        raise MatrixFormatError("bad size %r" % size[1]) from None
    if n < 0:
        raise MatrixFormatError("size must be nonnegative")
    if len(lines) < 2 + n:
        raise MatrixFormatError("expected %d entry rows, found %d" % (n, len(lines) - 2))
    rows = []
    for ln in lines[2 : 2 + n]:
        tokens = _split_row(ln)
        if len(tokens) != n:
            raise MatrixFormatError(
                "expected %d entries per row, got %d in %r" % (n, len(tokens), ln)
            )
        rows.append([ring.parse(tok) for tok in tokens])
    # admission failures (odd-degree forms, non-finite floats) surface as
    # ValidationError, distinct from parse errors
    return DenseMatrix(ring, rows), lines[2 + n :]


def format_matrix(matrix):
    ring = matrix.ring
    lines = ["ring %s" % ring.tag, "size %d" % matrix.n]
    for i in range(matrix.n):
        lines.append(" ".join(_quote(ring.format(x)) for x in matrix.row(i)))
    return "\n".join(lines) + "\n"
