"""Exception types raised across the package."""


class JackError(Exception):
    """Base class for all errors raised by jacklr."""


class BoxNotInDiagramError(JackError, ValueError):
    pass


class NotContainedError(JackError, ValueError):
    """A partition does not fit inside the requested rectangle."""


class GenericShapeError(JackError, ValueError):
    """The partition has a box strictly above and to the right of the rectangle."""


class SizeMismatchError(JackError, ValueError):
    pass


class PoleError(JackError, ZeroDivisionError):
    """Evaluation at a pole, or at a zero where a regular value was required."""


class NotASimplePoleError(JackError, ValueError):
    pass


class NotAHorizontalStripError(JackError, ValueError):
    pass


class NotAnInnerCornerError(JackError, ValueError):
    pass


class SearchBoundExceededError(JackError, ValueError):
    pass
