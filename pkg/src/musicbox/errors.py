"""Exception hierarchy. Every library error derives from :class:`MusicBoxError`."""

from __future__ import annotations


class MusicBoxError(Exception):
    """Base class for all errors raised by musicbox."""


class PositionError(MusicBoxError, IndexError):
    """A composition position outside ``[1, arity]``."""


class DimensionError(MusicBoxError, ValueError):
    """Mismatched voice counts, tuple lengths or parameter counts."""


class ValidationError(MusicBoxError, ValueError):
    """A value violates a structural invariant."""

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


class ParseError(ValidationError):
    """A token that cannot be read. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class ColorError(MusicBoxError, ValueError):
    """A colored composition whose colors do not match."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class UnknownColorError(MusicBoxError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class StructureError(MusicBoxError, ValueError):
    """A malformed composition tree."""


class ParameterError(MusicBoxError, ValueError):
    """Invalid parameters for a system builder or a generator."""


class UnsupportedTemperamentError(MusicBoxError, ValueError):
    """ABC spelling only exists for 12-TET."""
