"""Euler forms from curvature data, and the Gauss-Bonnet-Chern check.

The input is a skew matrix of curvature 2-forms attached to a frame.  In
an orthonormal frame the Euler form is simply the Pfaffian of that matrix
over the even exterior algebra; in a general frame the Pfaffian picks up
the frame volume, corrected by dividing by the square root of the Gram
determinant.  Built-in round spheres carry their volumes as example
constants, so the integral of the Euler form can be compared against
(2 pi)^m times the Euler characteristic.

No differential geometry happens here: curvature matrices are supplied
directly (or by the built-ins).  Deriving them from a metric is a job
for a computer-algebra system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import MatrixFormatError, ValidationError
from .exterior import ExteriorRing, FormElement
from .faddeev import determinant
from .matrices import DenseMatrix, SkewMatrix, _parse_matrix_lines, format_matrix, ring_from_tag
from .pfaffian import pfaffian_fl
from .rings import FloatRing, RationalRing


@dataclass(frozen=True)
class CurvatureInput:
    """Validated curvature data: omega is skew with entries homogeneous of
    degree 2 (or zero); gram, when present, is the symmetric matrix of
    frame inner products over the scalar ring."""

    omega: SkewMatrix
    gram: DenseMatrix | None
    frame_kind: str

    @classmethod
    def build(cls, omega, gram=None, tolerance=None):
        ring = omega.ring
        if not isinstance(ring, ExteriorRing):
            raise ValidationError("curvature entries must be exterior forms")
        n = omega.n
        if n % 2:
            raise ValidationError("the dimension must be even")
        if not isinstance(omega, SkewMatrix):
            omega = SkewMatrix.validated(omega)
        for i in range(n):
            for j in range(n):
                entry = omega[i, j]
                if entry and not entry.is_homogeneous(2):
                    raise ValidationError(
                        "curvature entry (%d, %d) is not a 2-form" % (i + 1, j + 1)
                    )
        if gram is None:
            return cls(omega, None, "orthonormal")
        if gram.n != n:
            raise ValidationError("gram matrix size does not match")
        scalar = gram.ring
        if scalar.exact:
            if gram != gram.transpose():
                raise ValidationError("gram matrix must be symmetric")
            for i in range(n):
                if not gram[i, i] > 0:
                    raise ValidationError("gram diagonal must be positive")
        else:
            tol = 0.0 if tolerance is None else tolerance
            for i in range(n):
                if gram[i, i] <= 0:
                    raise ValidationError("gram diagonal must be positive")
                for j in range(n):
                    if abs(gram[i, j] - gram[j, i]) > tol:
                        raise ValidationError("gram matrix must be symmetric")
        return cls(omega, gram, "general")


@dataclass(frozen=True)
class EulerFormResult:
    """The Euler form (top degree n), its coefficient on the volume form
    e_1 ^ ... ^ e_n, and the Gauss-Bonnet integral when a volume is known
    (always 0 when the form vanishes)."""

    form: FormElement
    top_coefficient: object
    gauss_bonnet_integral: float | None = None


def _exact_sqrt(q):
    if q <= 0:
        raise ValidationError("determinant %s admits no square root" % q)
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise ValidationError(
            "determinant %s is not a perfect square; supply an orthonormal "
            "frame or work over floats" % q
        )
    return Fraction(num, den)


def euler_form(curvature: CurvatureInput) -> EulerFormResult:
    """pf(omega) for orthonormal frames; det(gram)^(-1/2) pf(omega) for
    general frames (exact square root over the rationals, positive square
    root over floats)."""
    pf = pfaffian_fl(curvature.omega).value
    if curvature.frame_kind == "general":
        det_g = determinant(curvature.gram)
        scalar = curvature.gram.ring
        if isinstance(scalar, RationalRing):
            root = _exact_sqrt(det_g)
            pf = pf.scalar_mul(Fraction(1) / root)
        elif isinstance(scalar, FloatRing):
            if det_g <= 0:
                raise ValidationError("gram determinant must be positive")
            pf = pf.scalar_mul(1.0 / math.sqrt(det_g))
        else:
            raise ValidationError("gram entries must be rational or float scalars")
    top = pf.top_coefficient()
    integral = 0.0 if not top else None
    return EulerFormResult(pf, top, integral)


# --- built-in constant-curvature examples ---------------------------------

# volumes of the unit round spheres, supplied as example constants
SPHERE_VOLUMES = {2: 4 * math.pi, 4: 8 * math.pi ** 2 / 3}
SPHERE_EULER_CHARACTERISTIC = 2


def sphere_curvature(n):
    """Unit round sphere of even dimension n: in an orthonormal frame the
    curvature 2-forms are omega_ij = e_i ^ e_j."""
    if n not in SPHERE_VOLUMES:
        raise ValidationError("built-in spheres exist for n in %s" % sorted(SPHERE_VOLUMES))
    ring = ExteriorRing(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == j:
                row.append(ring.zero())
            else:
                row.append(
                    FormElement.covector(n, i) * FormElement.covector(n, j)
                )
        rows.append(row)
    omega = SkewMatrix._trusted(ring, rows)
    return CurvatureInput(omega, None, "orthonormal")


@dataclass(frozen=True)
class GaussBonnetReport:
    dimension: int
    top_coefficient: object
    volume: float
    integral: float
    expected: float
    relative_difference: float


def gauss_bonnet_check(n) -> GaussBonnetReport:
    """Compare the Euler-form integral over the built-in unit n-sphere
    with (2 pi)^(n/2) times its Euler characteristic."""
    result = euler_form(sphere_curvature(n))
    volume = SPHERE_VOLUMES[n]
    integral = float(result.top_coefficient) * volume
    expected = (2 * math.pi) ** (n // 2) * SPHERE_EULER_CHARACTERISTIC
    rel = abs(integral - expected) / abs(expected)
    return GaussBonnetReport(n, result.top_coefficient, volume, integral, expected, rel)


# --- curvature file format -------------------------------------------------
#
# the matrix file format with an exterior ring for omega, optionally
# followed by "gram <scalar-tag>" and n rows of scalar entries.

def parse_curvature(text, tolerance=None):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    omega, rest = _parse_matrix_lines(lines)
    if not isinstance(omega.ring, ExteriorRing):
        raise ValidationError("curvature files need an exterior ring")
    omega = SkewMatrix.validated(omega)
    gram = None
    if rest:
        head = rest[0].split()
        if len(head) != 2 or head[0] != "gram":
            raise MatrixFormatError("expected 'gram <tag>', got %r" % rest[0])
        scalar = ring_from_tag(head[1])
        if len(rest) - 1 != omega.n:
            raise MatrixFormatError(
                "gram section needs %d rows, found %d" % (omega.n, len(rest) - 1)
            )
        rows = []
        for ln in rest[1:]:
            tokens = ln.split()
            if len(tokens) != omega.n:
                raise MatrixFormatError("bad gram row %r" % ln)
            rows.append([scalar.parse(tok) for tok in tokens])
        gram = DenseMatrix(scalar, rows)
    return CurvatureInput.build(omega, gram, tolerance=tolerance)


def format_curvature(curvature: CurvatureInput) -> str:
    text = format_matrix(curvature.omega)
    if curvature.gram is not None:
        scalar = curvature.gram.ring
        lines = ["gram %s" % scalar.tag]
        for i in range(curvature.gram.n):
            lines.append(" ".join(scalar.format(x) for x in curvature.gram.row(i)))
        text += "\n".join(lines) + "\n"
    return text
