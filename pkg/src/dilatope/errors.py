class DilatopeError(Exception):
    pass


class EmptyInput(DilatopeError, ValueError):
    pass


class DimensionMismatch(DilatopeError, ValueError):
    pass


class NotAVertex(DilatopeError, ValueError):
    pass


class NotASimplex(DilatopeError, ValueError):
    pass


class NotPointed(DilatopeError, ValueError):
    pass


class BadParameters(DilatopeError, ValueError):
    pass


class Disconnected(DilatopeError, ValueError):
    pass


class BudgetExceeded(DilatopeError, RuntimeError):
    """A configured point, subset or time cap was hit."""


class ConsistencyViolation(DilatopeError, AssertionError):
    """A computed value contradicts a proven inequality; always an internal bug."""


class SearchFailed(DilatopeError, RuntimeError):
    """A decomposition that must exist was not found; always an internal bug."""
