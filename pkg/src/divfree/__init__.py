"""Division-free exact linear algebra over commutative Q-algebras.

Characteristic polynomials, determinants and adjugates by the classical
one-product-per-step recursion; Pfaffians and Pfaff-adjugates of
skew-symmetric matrices by its adaptation; all generic over rings that
only need exact division by integers, which admits exact rationals,
multivariate polynomials, and the even exterior algebra used to compute
Euler forms of Riemannian curvature data.
"""

from .errors import InternalConsistencyError, MatrixFormatError, ValidationError
from .rings import FloatRing, IntegerRing, RationalRing, Ring, ring_axiom_check
from .polynomials import (
    MultivariatePolynomial,
    PolynomialRing,
    evaluate,
    formal_derivative,
    parse_polynomial,
)
from .exterior import ExteriorRing, FormElement, grade_project, top_coefficient, wedge
from .matrices import (
    DenseMatrix,
    SkewMatrix,
    alt_j,
    format_matrix,
    j_matrix,
    left_mul_by_j,
    parse_matrix,
    remove_row_col_pair,
    ring_from_tag,
    skew_symmetrize,
    standard_j,
)
from .faddeev import CharPolyResult, adjugate, char_poly, determinant
from .pfaffian import (
    PerfectMatching,
    PfaffianResult,
    enumerate_matchings,
    jacobi_pfaffian_check,
    matching_sign,
    pf_of_j,
    pfaff_adjugate,
    pfaff_adjugate_by_definition,
    pfaffian_fl,
    pfaffian_laplace,
    pfaffian_matchings,
)
from .euler import (
    CurvatureInput,
    EulerFormResult,
    GaussBonnetReport,
    euler_form,
    gauss_bonnet_check,
    parse_curvature,
    sphere_curvature,
)
from .bench import BenchRecord, run_pfaffian_bench, seeded_skew_matrix

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "CharPolyResult",
    "CurvatureInput",
    "DenseMatrix",
    "EulerFormResult",
    "ExteriorRing",
    "FloatRing",
    "FormElement",
    "GaussBonnetReport",
    "IntegerRing",
    "InternalConsistencyError",
    "MatrixFormatError",
    "MultivariatePolynomial",
    "PerfectMatching",
    "PfaffianResult",
    "PolynomialRing",
    "RationalRing",
    "Ring",
    "SkewMatrix",
    "ValidationError",
    "adjugate",
    "alt_j",
    "char_poly",
    "determinant",
    "enumerate_matchings",
    "euler_form",
    "evaluate",
    "formal_derivative",
    "format_matrix",
    "gauss_bonnet_check",
    "grade_project",
    "j_matrix",
    "jacobi_pfaffian_check",
    "left_mul_by_j",
    "matching_sign",
    "parse_curvature",
    "parse_matrix",
    "parse_polynomial",
    "pf_of_j",
    "pfaff_adjugate",
    "pfaff_adjugate_by_definition",
    "pfaffian_fl",
    "pfaffian_laplace",
    "pfaffian_matchings",
    "remove_row_col_pair",
    "ring_axiom_check",
    "ring_from_tag",
    "run_pfaffian_bench",
    "seeded_skew_matrix",
    "skew_symmetrize",
    "sphere_curvature",
    "standard_j",
    "wedge",
]
