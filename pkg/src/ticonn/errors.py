"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "TicError",
    "OperandMismatchError",
    "InvalidIntervalError",
    "OutOfTraceError",
    "PatternError",
    "MissingRungError",
    "ParseError",
]


class TicError(Exception):
    """Base class for input and usage errors raised by this package."""


class OperandMismatchError(TicError):
    """Two algebra elements cannot be combined (different n, mode, shape)."""


class InvalidIntervalError(TicError):
    """A row height, window length T, jump target, or ladder foot is out of range."""


class OutOfTraceError(TicError):
    """A ladder or row would extend past the end of the trace."""


class PatternError(TicError):
    """A synthetic pattern is malformed (out-of-range cells, bad intersect)."""


class MissingRungError(RuntimeError):
    """A combine needed a rung that was never built. Internal logic bug."""


class ParseError(TicError):
    """Malformed trace or pattern text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
