"""Exception types shared across the package."""


class AddscreenError(Exception):
    """Base class for all package-specific errors."""


class InvalidDimension(AddscreenError):
    """Requested basis dimension is incompatible with the spline degree."""


class TooFewDistinctValues(AddscreenError):
    """Covariate does not have enough distinct values to support the basis."""


class SingularGram(AddscreenError):
    """Design Gram matrix is numerically singular (degenerate covariate)."""


class InvalidSpec(AddscreenError):
    """Simulation specification outside the supported parameter menu."""


class DataError(AddscreenError):
    """Malformed input data; message names the offending row/column."""
