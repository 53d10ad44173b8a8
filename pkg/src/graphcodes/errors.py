"""Exception types shared across the package."""


class GraphCodesError(Exception):
    pass


class NotAPrimePower(GraphCodesError):
    pass


class DivisionByZero(GraphCodesError, ZeroDivisionError):
    pass


class InvalidParams(GraphCodesError):
    pass


class UnsupportedFamily(GraphCodesError):
    pass


class NotADecomposition(GraphCodesError):
    pass


class NotOpen(GraphCodesError):
    pass


class NotNested(GraphCodesError):
    pass


class LengthMismatch(GraphCodesError):
    """Internal consistency failure: enumerated point count disagrees with
    the closed-form length.  Indicates a bug, never swallowed."""


class MonotonicityViolation(GraphCodesError):
    """Hilbert function failed to increase strictly before its plateau."""


class ResourceRefused(GraphCodesError):
    """Base for refusals of exponential work; carries the required amount."""

    def __init__(self, message, required):
        super().__init__(message)
        self.required = required


class CapExceeded(ResourceRefused):
    pass


class BudgetExceeded(ResourceRefused):
    pass
