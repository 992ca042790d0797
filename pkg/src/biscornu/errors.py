"""Exception types shared across the package."""


class BiscornuError(Exception):
    """Base class for all package errors."""


class ParseError(BiscornuError, ValueError):
    """Malformed input file; carries the offending 1-based line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class IsoperimetricError(BiscornuError, ValueError):
    """Two D-form boundaries with different perimeters."""


class ConstructionError(BiscornuError, RuntimeError):
    """A recipe could not be realised within its attempt budget."""
