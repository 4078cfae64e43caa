"""Error types shared across the package.

Each class corresponds to one CLI exit code: parse errors exit 2,
parameter errors 3, resource-limit errors 4, verification failures 5.
"""


class ParameterError(ValueError):
    """An argument violates an operation's preconditions."""


class ParseError(ValueError):
    """Malformed input text.  Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(RuntimeError):
    """A size guard or search budget was exceeded."""


class VerificationError(AssertionError):
    """A certificate, cover, or invariant check failed."""
