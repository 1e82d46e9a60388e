"""Exception types shared across the package."""

from __future__ import annotations


class GranuleDescError(Exception):
    """Base class for all package-specific errors."""


class ContextFormatError(GranuleDescError):
    """Raised when a context file or string cannot be parsed.

    Carries the offending line and column (1-based) when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is not None and self.column is not None:
            return f"line {self.line}, column {self.column}: {self.message}"
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        return self.message


class FlavorMismatch(GranuleDescError):
    """An operation was applied to a compound context of the wrong flavor."""


class SizeGuardExceeded(GranuleDescError):
    """An enumeration was refused because the input exceeds the size guard.

    Pass ``force=True`` (or ``--force`` on the command line) to override.
    """


class Inapplicable(GranuleDescError):
    """The requested operation has no answer for this input.

    Distinct from "indefinable": the operation's premise fails (for
    example, the granule shares no attribute), so neither a positive nor
    a negative verdict exists.  ``reason`` holds a machine-readable tag.
    """

    def __init__(self, reason: object, message: str):
        self.reason = reason
        self.message = message
        super().__init__(message)
