"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class UnsupportedExponentError(DomainError):
    """Operation requires a smooth exponent (1 < p < inf)."""


class DegenerateOperatorError(DomainError):
    """The zero operator was passed where norm attainment is undefined."""


class IsometryMultipleError(DomainError):
    """Operator is a scalar multiple of an isometry, so M_T is the whole sphere."""


class IsometryLikeError(RuntimeError):
    """A candidate polynomial vanished identically, signalling a continuum of
    norm-attaining directions that should have been caught as an isometry
    multiple."""
