"""Exception hierarchy shared by the codec, stream and grid layers."""


class TDLocoError(ValueError):
    """Base class for all data errors raised by this package."""


class ConstraintViolation(TDLocoError):
    """A word or stream contains the forbidden pattern (or is an excluded word)."""


class IndexRangeError(TDLocoError):
    """A lexicographic index lies outside the range a code can map."""


class FramingError(TDLocoError):
    """A stream, column sequence or grid cannot be split into whole frames."""


class ConvergenceError(RuntimeError):
    """Power iteration hit its iteration cap before reaching the tolerance."""
