"""Exception types raised across the package."""


class InvalidArgument(ValueError):
    """An argument violates a documented precondition."""


class FormatError(ValueError):
    """A file could not be parsed; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UndefinedRatioError(ArithmeticError):
    """A normalized quantity has a zero denominator."""


class InsufficientDataError(ValueError):
    """Not enough usable samples to fit a statistic."""


class SizeGuardError(RuntimeError):
    """A problem size exceeds a guarded cap."""
