"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when an input fails a documented precondition."""


class NonDegradedError(ValidationError):
    """Raised when an operation that requires a degraded eavesdropper
    (all standardized gains equal and below one) receives a channel
    that is not degraded."""
