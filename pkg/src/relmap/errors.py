"""Exception hierarchy for relmap."""


class RelmapError(ValueError):
    """Base class for every error raised by this package."""


class InvalidDimensionError(RelmapError):
    pass


class DimensionMismatchError(RelmapError):
    pass


class InvalidKernelError(RelmapError):
    pass


class EmptyTargetError(RelmapError):
    """The target object has zero total membership, so no score is defined."""


class NumericalFailureError(RelmapError):
    pass


class GridParseError(RelmapError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GridInvariantError(RelmapError):
    """A grid read from disk holds values outside [0, 1]."""
