"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ['AnyonkitError', 'InputError', 'ParseError', 'SchemaError', 'DataError',
           'NumericError']


class AnyonkitError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AnyonkitError, ValueError):
    """An argument is out of range or otherwise unusable."""


class ParseError(InputError):
    """A text input could not be parsed.

    Attributes
    ----------
    position : int | None
        1-based token (or character) position of the offending input, if known.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class SchemaError(AnyonkitError):
    """A model file or model data set violates the model schema."""


class DataError(AnyonkitError):
    """A required table entry is missing or inconsistent during a computation."""


class NumericError(AnyonkitError):
    """A numerical routine failed to converge."""
