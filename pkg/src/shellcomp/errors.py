"""Exception types shared across the package."""

from __future__ import annotations


class ShellcompError(Exception):
    """Base class for all library errors."""


class DomainError(ShellcompError, ValueError):
    """An operation was called outside its stated domain."""


class ParseError(ShellcompError, ValueError):
    """A .scx file could not be parsed.  Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardExceeded(ShellcompError):
    """A configurable size guard stopped a potentially exponential search."""


class NotVertexDecomposable(DomainError):
    """Raised when an operation requires a vertex decomposable input."""


class InvalidPrefix(DomainError):
    """A supplied shelling prefix violates the shelling condition.

    The failing step is available as ``failure``.
    """

    def __init__(self, failure):
        self.failure = failure
        super().__init__(f"prefix is not a partial shelling: {failure}")
