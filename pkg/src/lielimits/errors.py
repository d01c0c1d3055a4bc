"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: DomainError -> 1, ParseError -> 2,
NotStabilizedError -> 3.  InternalConsistencyError signals a bug in the
library itself (never valid input) and also exits 1, loudly.
"""


class LieLimitsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LieLimitsError):
    """Mathematically invalid input: bad weight, wrong rank, inconsistent data."""


class DimensionMismatchError(DomainError):
    """A weight, branching, or matrix has the wrong length or total dimension."""


class ResourceBoundError(DomainError):
    """A configured enumeration or dimension bound was exceeded."""


class ParseError(LieLimitsError):
    """Malformed file, literal, or command-line argument."""


class NotStabilizedError(LieLimitsError):
    """The finite prefix is too short to witness stabilization."""

    def __init__(self, message, origins=()):
        super().__init__(message)
        self.origins = tuple(origins)


class InternalConsistencyError(LieLimitsError):
    """An identity that must hold for every valid input failed: a bug."""
