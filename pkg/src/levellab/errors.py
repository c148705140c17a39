"""Shared exception types.

Every error carries a short machine-readable ``category`` so the command
line layer can report failures uniformly.
"""

from __future__ import annotations


class LevelLabError(Exception):
    """Base class for all package-specific errors."""

    category = "error"


class HypothesisError(LevelLabError):
    """The input does not satisfy a hypothesis the computation requires."""

    category = "hypothesis"


class ParseError(LevelLabError):
    """Malformed form text; carries the offending position."""

    category = "parse"

    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where += f" at line {line}"
        if position is not None:
            where += f" column {position + 1}"
        super().__init__(message + where)


class DependentGeneratorsError(LevelLabError):
    """Presented generators are linearly dependent; the module is level of
    smaller type and the caller must decide how to proceed."""

    category = "dependent-generators"

    def __init__(self, message: str, presented: int = 0, rank: int = 0):
        self.presented = presented
        self.rank = rank
        super().__init__(message)


class SoundnessError(LevelLabError):
    """An internal consistency check failed; this signals a bug, not a
    mathematical discovery."""

    category = "internal"


class VerificationError(LevelLabError):
    """A stored certificate did not replay to the recorded result."""

    category = "verify"
