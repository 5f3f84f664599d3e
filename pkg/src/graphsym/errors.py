"""Exception types shared across the package."""


class GraphsymError(Exception):
    """Base class for all package-specific errors."""


class DomainError(GraphsymError):
    """An argument violates an operation's precondition."""


class CapacityError(GraphsymError):
    """A request exceeds the configured size limits."""


class GraphParseError(GraphsymError):
    """A graph file is malformed. Carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
