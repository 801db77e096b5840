"""Division-free characteristic polynomials, determinants and adjugates.

One matrix product per iteration:

    N_1 = I,   c_k = -tr(A N_k)/k,   N_{k+1} = A N_k + c_k I

After n steps the c_k are the coefficients of det(tI - A), N_n recovers
the adjugate up to sign, and N_{n+1} must vanish.  The only divisions are
by the loop counter, so any ring with exact integer division works.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError
from .matrices import DenseMatrix
from .rings import FloatRing


@dataclass(frozen=True)
class CharPolyResult:
    """Coefficients [c_0..c_n] of det(tI - A) = sum c_{n-j} t^j, the
    adjugate by-product, and the final recursion residual (N_{n+1}, the
    zero matrix whenever the ring honors its contract)."""

    coefficients: list
    adjugate: DenseMatrix
    residual: DenseMatrix
    residual_max_abs: float | None = None


def char_poly(a: DenseMatrix) -> CharPolyResult:
    """Run the recursion on a square matrix over any Q-algebra ring.

    Over exact rings a nonzero residual raises InternalConsistencyError:
    the input was fine, so the ring implementation broke an axiom.  Over
    floats the residual magnitude is reported in the result instead,
    since roundoff grows with n.
    """
    ring, n = a.ring, a.n
    if n == 0:
        empty = DenseMatrix(ring, [])
        return CharPolyResult([ring.one()], empty, empty,
                              None if ring.exact else 0.0)
    if isinstance(ring, FloatRing):
        return _char_poly_float(a)

    identity = DenseMatrix.identity(ring, n)
    coefficients = [ring.one()]
    nk = identity
    m = None
    for k in range(1, n + 1):
        m = a @ nk
        ck = -ring.divide_by_integer(m.trace(), k)
        coefficients.append(ck)
        if k < n:
            nk = m + identity.scalar_mul(ck)
    residual = m + identity.scalar_mul(coefficients[n])
    if ring.exact and not residual.is_zero():
        raise InternalConsistencyError(
            "nonzero characteristic-polynomial residual: the entry ring "
            "violates the Q-algebra contract"
        )
    sign = ring.one() if n % 2 else -ring.one()
    adjugate = nk.scalar_mul(sign)
    max_abs = None if ring.exact else residual.max_abs()
    return CharPolyResult(coefficients, adjugate, residual, max_abs)


def _char_poly_float(a: DenseMatrix) -> CharPolyResult:
    # same recursion, run on numpy arrays; this is what makes large float
    # benchmarks feasible
    import numpy as np

    n = a.n
    mat = np.array(a.to_rows(), dtype=float)
    identity = np.eye(n)
    coefficients = [1.0]
    nk = identity
    m = None
    for k in range(1, n + 1):
        m = mat @ nk
        ck = -m.trace() / k
        coefficients.append(float(ck))
        if k < n:
            nk = m + ck * identity
    residual = m + coefficients[n] * identity
    sign = 1.0 if n % 2 else -1.0
    ring = a.ring
    return CharPolyResult(
        coefficients,
        DenseMatrix(ring, (sign * nk).tolist()),
        DenseMatrix(ring, residual.tolist()),
        float(np.abs(residual).max()),
    )


def determinant(a: DenseMatrix):
    """(-1)^n c_n from the recursion."""
    cn = char_poly(a).coefficients[a.n]
    return cn if a.n % 2 == 0 else -cn


def adjugate(a: DenseMatrix) -> DenseMatrix:
    """The matrix with A adj(A) = det(A) I, recovered from N_n."""
    return char_poly(a).adjugate
