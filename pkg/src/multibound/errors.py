"""Exception types shared across the package."""

from __future__ import annotations


class MultiboundError(Exception):
    """Base class for all errors raised by this package."""


class ArityMismatchError(MultiboundError):
    """Monomials with different numbers of variables were mixed."""


class DomainError(MultiboundError):
    """The operation is undefined for this input (zero/unit ideal, bad k, ...)."""


class ParseError(MultiboundError):
    """An ideal file or document could not be parsed."""


class UsageError(MultiboundError):
    """Command line was malformed."""


class ConsistencyError(MultiboundError):
    """An internal cross-check failed.  This signals a bug, not bad input."""


class ResourceLimitError(MultiboundError):
    """A configured resource cap was exceeded.  Never a silent truncation."""

    def __init__(self, message: str, *, limit_name: str, limit: int, observed: int):
        super().__init__(message)
        self.limit_name = limit_name
        self.limit = limit
        self.observed = observed


class StabilizationError(MultiboundError):
    """A finite-difference sequence did not stabilize before the cutoff.

    The raw length sequence is attached so the caller can inspect or retry
    with a larger cutoff.
    """

    def __init__(self, message: str, *, lengths: tuple[int, ...]):
        super().__init__(message)
        self.lengths = lengths


class FitError(MultiboundError):
    """No exact-linear tail of the required length was found."""

    def __init__(self, message: str, *, values: tuple[int, ...]):
        super().__init__(message)
        self.values = values
