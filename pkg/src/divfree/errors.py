"""Exception types shared across the package.

The CLI maps these onto exit codes: MatrixFormatError -> 2,
ValidationError -> 3, InternalConsistencyError -> 4.
"""


class MatrixFormatError(ValueError):
    """A matrix or curvature file (or an entry literal) could not be parsed."""


class ValidationError(ValueError):
    """An input violates a documented precondition (non-skew matrix,
    odd-degree entry, size cap exceeded, missing tolerance, ...)."""


class InternalConsistencyError(RuntimeError):
    """An internal invariant failed, e.g. a nonzero recursion residual over
    an exact ring.  Indicates a ring-contract violation or a bug, never
    bad user input."""
