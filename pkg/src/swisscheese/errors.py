"""Exception types raised by the library."""

from __future__ import annotations


class SwissCheeseError(Exception):
    """Base class for all library errors."""


class PreconditionError(SwissCheeseError, ValueError):
    """An operation was called outside its domain.

    ``condition`` names the violated hypothesis in compact mathematical
    notation, so callers (the CLI in particular) can report it verbatim.
    """

    def __init__(self, message: str, condition: str = ""):
        super().__init__(message)
        self.condition = condition


class DegenerateDiskError(PreconditionError):
    """A zero-radius disk was passed where a positive radius is required."""


class RadiusOrderError(PreconditionError):
    """Radii are not in the order an operation requires."""


class ContainmentHypothesisError(PreconditionError):
    """A containment/non-containment hypothesis between disks fails."""


class InfeasiblePackingError(PreconditionError):
    """A generator cannot place the requested disks."""


class InvariantViolation(SwissCheeseError, RuntimeError):
    """A runtime assertion inside a rewriter failed.

    This signals either a bug or floating-point trouble, never bad input:
    inputs are validated before rewriting starts.
    """
