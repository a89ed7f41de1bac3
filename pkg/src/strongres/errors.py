"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for invalid-input errors."""


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnectedError(GraphError):
    def __init__(self, message="graph not connected"):
        super().__init__(message)


class DomainError(GraphError):
    """Input is a valid graph but outside the domain of the invariant."""


class SearchBudgetExceeded(RuntimeError):
    """An exact search ran out of its node budget.

    ``bounds`` carries whatever bounds were known at the time (a
    ``BoundsReport`` for the partition search, ``None`` for the kernels).
    """

    def __init__(self, message="search budget exceeded", bounds=None, nodes=0):
        super().__init__(message)
        self.bounds = bounds
        self.nodes = nodes


class CertificateError(AssertionError):
    """A computed certificate failed re-verification (internal invariant breach)."""
