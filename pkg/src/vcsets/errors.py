"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class VCSetsError(Exception):
    """Base class for all library errors."""


class DomainMismatchError(VCSetsError, ValueError):
    """An element or subset does not belong to the ground set."""


class PreconditionError(VCSetsError, ValueError):
    """An operation was called on an input outside its contract."""


class NotMaximumError(PreconditionError):
    """A maximum-only operation was called on a non-maximum system (or on a set
    where the trace does not miss exactly one pattern)."""

    def __init__(self, message: str, missing: int | None = None):
        super().__init__(message)
        self.missing = missing


class NotCompressibleError(PreconditionError):
    """No internally shattered set of the requested size exists."""


class GeneralPositionError(PreconditionError):
    """A point configuration fails the general-position checks."""


class CapExceededError(VCSetsError):
    """An input exceeds the size caps that bound exponential work."""


class ParseError(VCSetsError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message
