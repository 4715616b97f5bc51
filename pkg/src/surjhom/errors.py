class SurjhomError(Exception):
    pass


class GraphParseError(SurjhomError, ValueError):
    """Raised when a graph or mapping file cannot be read.

    ``line`` is the 1-based line number of the offending line, or None when
    the problem is global (e.g. a missing header).
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedLineError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class PreconditionError(SurjhomError, ValueError):
    """An algorithm was called on input outside its class (e.g. a non-tree)."""


class CoverBudgetExceeded(PreconditionError):
    pass


class InvalidInstanceError(SurjhomError, ValueError):
    """A multiset is not (m, B)-positive, or a 3-partition is invalid."""


class SizeGuardError(SurjhomError, ValueError):
    pass
