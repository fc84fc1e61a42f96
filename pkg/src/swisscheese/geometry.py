"""Disk predicates and the extremal disk constructions.

A :class:`Disk` is just a centre and a radius. Whether it stands for the
open disk ``{|z - c| < r}`` or the closed disk ``{|z - c| <= r}`` depends on
the operation, and every function below says which one it means. A radius
of zero is allowed: the closed disk is then the single point ``c`` and the
open disk is empty.

All comparisons are plain double-precision comparisons with no slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ContainmentHypothesisError, DegenerateDiskError, InvariantViolation, RadiusOrderError

__all__ = [
    "Point",
    "Disk",
    "Annulus",
    "distance",
    "closed_in_closed",
    "closed_in_open",
    "open_in_open",
    "open_outside_closed",
    "closed_disks_intersect",
    "open_disks_intersect",
    "combine_disks",
    "pull_in_disk",
    "annular_pull_in",
]


class Point(NamedTuple):
    x: float
    y: float


def _as_point(p) -> Point:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"point coordinates must be finite, got ({x}, {y})")
    return Point(x, y)


@dataclass(frozen=True)
class Disk:
    """Centre/radius pair. ``Disk((0, 0), 1)`` works; the centre is coerced."""

    center: Point
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _as_point(self.center))
        r = float(self.radius)
        if not math.isfinite(r) or r < 0:
            raise ValueError(f"disk radius must be finite and >= 0, got {self.radius!r}")
        object.__setattr__(self, "radius", r)

    @classmethod
    def of(cls, x: float, y: float, r: float) -> Disk:
        return cls(Point(x, y), r)

    @property
    def degenerate(self) -> bool:
        return self.radius == 0.0


@dataclass(frozen=True)
class Annulus:
    """Closed annulus ``{inner_radius <= |z - center| <= outer_radius}``."""

    center: Point
    inner_radius: float
    outer_radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _as_point(self.center))
        lo, hi = float(self.inner_radius), float(self.outer_radius)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError("annulus radii must be finite")
        if not 0 <= lo < hi:
            raise ValueError(f"annulus needs 0 <= inner < outer, got {lo}, {hi}")
        object.__setattr__(self, "inner_radius", lo)
        object.__setattr__(self, "outer_radius", hi)

    @property
    def width(self) -> float:
        return self.outer_radius - self.inner_radius


def distance(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


# -- predicates ---------------------------------------------------------------


def closed_in_closed(inner: Disk, outer: Disk) -> bool:
    """``cb(inner) ⊆ cb(outer)``."""
    return distance(inner.center, outer.center) <= outer.radius - inner.radius


def closed_in_open(inner: Disk, outer: Disk) -> bool:
    """``cb(inner) ⊆ ob(outer)``."""
    return distance(inner.center, outer.center) < outer.radius - inner.radius


def open_in_open(inner: Disk, outer: Disk) -> bool:
    """``ob(inner) ⊆ ob(outer)``. An empty open disk is contained in anything."""
    if inner.radius == 0.0:
        return True
    return distance(inner.center, outer.center) <= outer.radius - inner.radius


def open_outside_closed(open_disk: Disk, closed_disk: Disk) -> bool:
    """``ob(open_disk) ∩ cb(closed_disk) = ∅``; requires a positive open radius."""
    if open_disk.radius <= 0:
        raise DegenerateDiskError("open disk must have positive radius", "r > 0")
    return distance(open_disk.center, closed_disk.center) >= closed_disk.radius + open_disk.radius


def closed_disks_intersect(d1: Disk, d2: Disk) -> bool:
    return distance(d1.center, d2.center) <= d1.radius + d2.radius


def open_disks_intersect(d1: Disk, d2: Disk) -> bool:
    if d1.radius == 0.0 or d2.radius == 0.0:
        return False
    return distance(d1.center, d2.center) < d1.radius + d2.radius


# -- extremal constructions -----------------------------------------------------


def combine_disks(d1: Disk, d2: Disk) -> Disk:
    """Smallest open disk containing ``ob(d1) ∪ ob(d2)``.

    The centre lies on the segment joining the two centres. If one open disk
    already contains the other the larger one is returned as is (this also
    covers coincident centres).
    """
    if d1.radius <= 0 or d2.radius <= 0:
        raise DegenerateDiskError("combine_disks needs two positive radii", "r1, r2 > 0")
    if open_in_open(d2, d1):
        return d1
    if open_in_open(d1, d2):
        return d2
    (x1, y1), r1 = d1.center, d1.radius
    (x2, y2), r2 = d2.center, d2.radius
    d = math.hypot(x2 - x1, y2 - y1)
    r = (r1 + r2 + d) / 2
    t = (r - r1) / d
    return Disk(Point(x1 + t * (x2 - x1), y1 + t * (y2 - y1)), r)


def pull_in_disk(outer: Disk, obstacle: Disk) -> Disk:
    """Largest closed disk inside ``cb(outer)`` that misses ``ob(obstacle)``.

    Requires ``outer.radius > obstacle.radius > 0`` and that the closed
    obstacle is not inside the open outer disk. The result has radius at least
    ``outer.radius - obstacle.radius``, with equality exactly when the open
    obstacle sits inside the open outer disk.
    """
    r1, r2 = outer.radius, obstacle.radius
    if r2 <= 0:
        raise DegenerateDiskError("obstacle must have positive radius", "r2 > 0")
    if not r1 > r2:
        raise RadiusOrderError(
            f"outer radius {r1} must exceed obstacle radius {r2}", "r1 > r2"
        )
    if closed_in_open(obstacle, outer):
        raise ContainmentHypothesisError(
            "closed obstacle lies inside the open outer disk", "cb(a2,r2) ⊄ ob(a1,r1)"
        )
    (x1, y1), (x2, y2) = outer.center, obstacle.center
    d = math.hypot(x1 - x2, y1 - y2)
    if d >= r1 + r2:
        return outer
    if d <= 0:
        # r1 > r2 together with non-containment forces d >= r1 - r2 > 0
        raise InvariantViolation(f"pull_in_disk reached d = {d} despite valid hypotheses")
    r = (r1 + d - r2) / 2
    t = (r1 - r) / d
    return Disk(Point(x1 + t * (x1 - x2), y1 + t * (y1 - y2)), r)


def annular_pull_in(annulus: Annulus, obstacle: Disk) -> Annulus:
    """Shrink a closed annulus, keeping its centre, so it misses ``ob(obstacle)``.

    The closed obstacle must touch the closure of the annulus' complement
    (the closed hole or the region ``|z - a| >= outer``), and its radius must
    be below half the annulus width. Width drops by at most twice the
    obstacle radius.
    """
    a = annulus.center
    r1, r0 = annulus.inner_radius, annulus.outer_radius
    s = obstacle.radius
    if not 0 < s < (r0 - r1) / 2:
        raise RadiusOrderError(
            f"obstacle radius {s} must lie in (0, {(r0 - r1) / 2})", "0 < s < (r0 - r1)/2"
        )
    d = distance(obstacle.center, a)
    if not (d - s <= r1 or d + s >= r0):
        raise ContainmentHypothesisError(
            "closed obstacle lies inside the open annulus", "cb(b,s) ∩ closure(C \\ K) ≠ ∅"
        )
    if d + s <= r1 or d - s >= r0:
        # open obstacle is already disjoint from the annulus
        return annulus
    if d - s <= r1:
        return Annulus(a, d + s, r0)
    return Annulus(a, r1, d - s)
