"""Exception hierarchy shared by every module."""


class CubePathsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDimension(CubePathsError, ValueError):
    pass


class InvalidArgument(CubePathsError, ValueError):
    pass


class PreconditionViolation(CubePathsError, ValueError):
    """An input does not meet the hypotheses of the requested construction."""


class NoValidDimension(CubePathsError):
    """No split dimension keeps both halves conditionally fault-free."""


class BudgetExceeded(CubePathsError):
    """A backtracking search hit its node limit.

    ``best`` holds the best partial path system seen, or ``None``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class ExceptionCase(CubePathsError):
    """The n=3 configuration in which no spanning path exists."""


class ConstructionFailure(CubePathsError):
    """A recursive construction could not complete its current branch."""


class SeamNotAdjacent(CubePathsError):
    pass


class VertexCollision(CubePathsError):
    pass


class VertexNotOnPath(CubePathsError, KeyError):
    pass


class DimensionTooLarge(CubePathsError, ValueError):
    pass
