"""Exception hierarchy shared by all simdex modules."""


class SimdexError(Exception):
    """Base class for every error raised by this package."""


class BothZeroError(SimdexError, ValueError):
    """The pair (0, 0) was passed where the bounded indices are undefined."""


class EmptyComparisonError(SimdexError, ValueError):
    """An aggregate index denominator is zero (nothing to compare)."""


class GridMismatchError(SimdexError, ValueError):
    """Two sampled functions do not share origin, spacing, or length."""


class LengthMismatchError(SimdexError, ValueError):
    """Two vectors have different lengths."""


class KernelTooLongError(SimdexError, ValueError):
    """The sliding kernel is longer than the signal in valid mode."""


class FormatError(SimdexError, ValueError):
    """An input file does not conform to its declared format."""
