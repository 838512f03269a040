"""Exception hierarchy shared by every module."""


class SCCError(Exception):
    """Base class for all errors raised by sccolor."""


class DomainError(SCCError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidOrderingError(DomainError):
    """A vertex ordering is not a permutation of the graph's vertices."""


class ResourceError(SCCError, RuntimeError):
    """An exhaustive computation would exceed its configured budget."""


class ParseError(DomainError):
    """Malformed instance or coloring text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
