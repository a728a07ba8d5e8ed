"""Exception hierarchy shared by every module."""


class InteriorError(Exception):
    """Base class for all errors raised by this package."""


class InvalidEdge(InteriorError, ValueError):
    """An edge refers to a vertex outside the graph, or is not an edge of it."""


class ParallelEdge(InteriorError, ValueError):
    """The same (i, j) pair was given twice."""


class InvalidInput(InteriorError, ValueError):
    pass


class ResourceLimit(InteriorError, RuntimeError):
    """A configured size cap was exceeded."""


class ConsistencyFailure(InteriorError, RuntimeError):
    """An internal cross-check failed. This indicates a bug, not bad input."""


class ParseError(InteriorError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MethodMismatch(InteriorError):
    """Two methods returned different polynomials for the same graph."""
