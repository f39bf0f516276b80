"""Exception types shared across the package.

Validation errors deliberately carry the violated invariant in their class
name so that command-line consumers can surface it verbatim.
"""


class QDiscrimError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(QDiscrimError, ValueError):
    """An input violates a documented precondition or invariant."""


class NonSquareError(ValidationError):
    """Operation requires a square matrix."""


class NotSquareError(ValidationError):
    """Signal count must equal the state-space dimension."""


class DimensionMismatchError(ValidationError):
    """Operand dimensions are incompatible."""


class DimensionOverflowError(ValidationError):
    """Result would exceed the configured dimension cap."""


class InvalidPermutationError(ValidationError):
    """Index sequence is not a bijection on the column range."""


class RankDeficientError(ValidationError):
    """Matrix is numerically rank-deficient."""


class NotNormalizedError(ValidationError):
    """State columns must have unit Euclidean norm."""


class LinearlyDependentError(ValidationError):
    """State columns must be linearly independent."""


class BadPriorsError(ValidationError):
    """Prior probabilities must be non-negative and sum to one."""


class ThetaOutOfRangeError(ValidationError):
    """Separation angle must lie in (0, pi/2]."""


class NonUniformPriorsError(ValidationError):
    """Operation is defined for uniform priors only."""


class NumericalFailureError(QDiscrimError):
    """An iterative numerical routine failed to converge."""
