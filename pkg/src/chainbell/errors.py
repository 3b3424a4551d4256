"""Exception types shared across the package."""


class InvalidProbabilityError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class InvalidDimensionError(ValueError):
    pass


class NonAdjacentLinkError(ValueError):
    pass


class UnsupportedVariantError(ValueError):
    pass


class ShapeMismatchError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    """Raised when exhaustive enumeration would exceed the strategy budget."""


class NoneFoundError(RuntimeError):
    """Raised when a scan reaches its cap without finding a violation."""
