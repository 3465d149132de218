"""Exception types shared across the package."""


class QSearchError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(QSearchError):
    """A user-supplied value violates an input contract."""


class NonFiniteError(ValidationError):
    """A numeric input is NaN or infinite."""


class NonHermitianError(ValidationError):
    """The requested couplings do not define a Hermitian generator."""


class NonPositiveScaleError(ValidationError):
    """Energy scale or Planck constant is not strictly positive."""


class InvalidOverlapError(ValidationError):
    """Source-target overlap outside the open interval (0, 1)."""


class InvalidThresholdError(ValidationError):
    """Success-probability threshold outside [0, 1]."""


class LabelMismatchError(ValidationError):
    """A case label does not match the parameters it was paired with."""


class DegenerateOffDiagonalError(QSearchError):
    """The off-diagonal matrix element vanishes; eigenvector coefficients
    are undefined and callers must use the direct probability formula."""


class StepUnderflowError(QSearchError):
    """The integrator step criterion would require more steps than allowed."""


class QuadratureFailureError(QSearchError):
    """Adaptive quadrature could not meet tolerance within its panel budget."""
