"""Exception types raised across the package."""


class StableMapsError(Exception):
    """Base class for every error raised by :mod:`stablemaps`."""


class DivisionNotExact(StableMapsError, ArithmeticError):
    """A polynomial division left a nonzero remainder.

    In this package every division is expected to be exact: quotients come
    from fibre-space or group-quotient identities.  A remainder means the
    claimed structure does not hold, or a recipe is wrong.
    """


class DivisionByZero(StableMapsError, ZeroDivisionError):
    pass


class NegativeInput(StableMapsError, ValueError):
    """A polynomial expected to be a Poincare polynomial has a negative coefficient."""


class BranchMismatch(StableMapsError, AssertionError):
    """A piecewise Betti-number branch disagrees with the generating polynomial."""


class BoundExceeded(StableMapsError, ValueError):
    """Requested enumeration is outside the supported range."""


class ConsistencyError(StableMapsError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
