"""Exception types shared across the package."""

from __future__ import annotations


class OddGraceError(Exception):
    """Base class for all package errors."""


class ParameterError(OddGraceError, ValueError):
    """A family or function parameter violates its documented constraint."""


class DisconnectedError(OddGraceError, ValueError):
    """The operation requires a connected graph."""


class NotBipartiteError(OddGraceError, ValueError):
    """The operation requires a bipartite graph."""

    def __init__(self, message: str, odd_cycle: tuple[int, ...] = ()):
        super().__init__(message)
        self.odd_cycle = odd_cycle


class ResourceError(OddGraceError, RuntimeError):
    """A size, node or time limit was exceeded before the search finished.

    ``stats`` carries whatever counters were collected up to that point.
    A resource error never means "infeasible".
    """

    def __init__(self, message: str, stats=None):
        super().__init__(message)
        self.stats = stats


class InfeasibleError(OddGraceError):
    """No labeling exists inside the requested label range."""


class ConstructionError(OddGraceError, AssertionError):
    """A built-in construction produced a labeling that fails verification.

    This always indicates a bug in the construction, never bad input.
    """
