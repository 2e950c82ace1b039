"""Exception types raised across the package."""


class HeckeError(Exception):
    """Base class for every error raised by hecketrans."""


class ParseError(HeckeError, ValueError):
    pass


class NonIntegralDifference(HeckeError, ValueError):
    """Segment endpoints do not differ by an integer."""


class EmptyInput(HeckeError, ValueError):
    pass


class NonIntegralWeight(HeckeError, ValueError):
    """Some coordinate of lambdaL - lambdaR is not an integer."""


class NegativeMu(HeckeError, ValueError):
    pass


class IndexOutOfRange(HeckeError, IndexError):
    pass


class DimensionCap(HeckeError):
    """A module construction would exceed the configured dimension cap."""

    def __init__(self, dim, cap):
        super().__init__(f"module dimension {dim} exceeds cap {cap}")
        self.dim = dim
        self.cap = cap


class InvarianceViolation(HeckeError):
    """A generalized eigenspace is not stable under the restricted generators."""


class CandidateSetIncomplete(HeckeError):
    """Generalized eigenspaces over the candidate set do not fill the module."""
