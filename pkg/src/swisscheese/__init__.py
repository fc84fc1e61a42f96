"""Abstract Swiss cheeses and their classicalisation."""

from .cheese import Cheese, CheeseStats, stats
from .errors import InvariantViolation, PreconditionError, SwissCheeseError
from .geometry import Annulus, Disk, Point

__version__ = "0.1.0"

__all__ = [
    "Annulus",
    "Cheese",
    "CheeseStats",
    "Disk",
    "InvariantViolation",
    "Point",
    "PreconditionError",
    "SwissCheeseError",
    "stats",
]
