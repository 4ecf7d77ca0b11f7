"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class BraidError(Exception):
    """Base class for every error raised by braidmetric."""


class DataError(BraidError, ValueError):
    """Malformed input: unparsable word, bad strand count, bad file contents."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class PreconditionError(BraidError, ValueError):
    """An operation was called on an argument outside its domain."""


class MoveError(PreconditionError):
    """A move was applied where its letter pattern is absent."""


class DerivationError(DataError):
    """A derivation contains a move that does not apply; ``index`` is 1-based."""


class ConsistencyError(BraidError, AssertionError):
    """An internal invariant was violated. This always indicates a bug."""
