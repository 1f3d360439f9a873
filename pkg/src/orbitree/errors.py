"""Exception types raised across the package."""


class OrbitreeError(Exception):
    """Base class for all package errors."""


class AutomatonSyntaxError(OrbitreeError, ValueError):
    """Malformed automaton source text."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ResourceLimitError(OrbitreeError):
    """A level is larger than the configured vertex budget."""
