"""Plane regions built from radially symmetric pieces.

Every primitive region is a *band* ``{z : lo ⋈ |z - c| ⋈ hi}`` about some
centre ``c``: a closed disk is a closed band with no lower bound, a closed
annulus is a closed band, and the open dilation ``U(K, M) = {dist(z, K) < M}``
of either is an open band with both bounds moved out by ``M``. A
:class:`Union` is a finite union of primitives.

Since the radii of a closed disk about any point form an interval, most
questions about disks versus bands reduce to comparing two intervals.
Questions that are hard to answer exactly for general unions (containment,
disjointness) are answered conservatively: ``True`` is always correct,
``False`` may mean "could not prove it".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union as _U

import numpy as np

from .geometry import Annulus, Disk, Point, _as_point, distance

__all__ = [
    "Band",
    "Union",
    "Region",
    "as_band",
    "bands",
    "dilate",
    "contains_point",
    "contains_points",
    "meets_closed_disk",
    "meets_mask",
    "contains_closed_disk",
    "within_open_disk",
    "regions_disjoint",
    "region_within",
    "bounding_radius",
]


@dataclass(frozen=True)
class Band:
    """Radial band about ``center``; ``lo = -inf`` means no inner bound."""

    center: Point
    lo: float
    hi: float
    open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "center", _as_point(self.center))
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or not math.isfinite(hi) or hi < 0 or lo > hi:
            raise ValueError(f"invalid band radii lo={lo}, hi={hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)


@dataclass(frozen=True)
class Union:
    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a union region needs at least one part")
        for p in parts:
            if not isinstance(p, (Disk, Annulus, Band, Union)):
                raise TypeError(f"not a region: {p!r}")
        object.__setattr__(self, "parts", parts)


Region = _U[Disk, Annulus, Band, Union]


def as_band(region: Disk | Annulus | Band) -> Band:
    if isinstance(region, Band):
        return region
    if isinstance(region, Disk):
        return Band(region.center, -math.inf, region.radius, open=False)
    if isinstance(region, Annulus):
        return Band(region.center, region.inner_radius, region.outer_radius, open=False)
    raise TypeError(f"not a primitive region: {region!r}")


def bands(region: Region) -> list[Band]:
    """Flatten a region into its primitive bands."""
    if isinstance(region, Union):
        out: list[Band] = []
        for p in region.parts:
            out.extend(bands(p))
        return out
    return [as_band(region)]


def dilate(region: Region, margin: float) -> Region:
    """``U(K, M) = {z : dist(z, K) < M}`` for ``K = region``, ``M = margin``."""
    if not margin > 0:
        raise ValueError(f"dilation margin must be positive, got {margin}")
    if isinstance(region, Union):
        return Union(tuple(dilate(p, margin) for p in region.parts))
    b = as_band(region)
    return Band(b.center, b.lo - margin, b.hi + margin, open=True)


def bounding_radius(region: Region) -> tuple[Point, float]:
    """A closed disk (centre, radius) containing the region."""
    bs = bands(region)
    c = bs[0].center
    return c, max(distance(c, b.center) + b.hi for b in bs)


# -- interval helpers ----------------------------------------------------------


def _interval_meets(b: Band, dmin, dmax):
    if b.open:
        return (dmax > b.lo) & (dmin < b.hi)
    return (dmax >= b.lo) & (dmin <= b.hi)


def _interval_inside(b: Band, dmin, dmax):
    if b.open:
        return (dmin > b.lo) & (dmax < b.hi)
    return (dmin >= b.lo) & (dmax <= b.hi)


def interval_inside(b: Band, dmin: float, dmax: float) -> bool:
    """Is every radius in ``[dmin, dmax]`` (about ``b.center``) inside ``b``?"""
    return bool(_interval_inside(b, dmin, dmax))


# -- points --------------------------------------------------------------------


def contains_points(region: Region, xs, ys) -> np.ndarray:
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    hit = np.zeros(np.broadcast(xs, ys).shape, dtype=bool)
    for b in bands(region):
        d = np.hypot(xs - b.center.x, ys - b.center.y)
        hit |= _interval_meets(b, d, d)
    return hit


def contains_point(region: Region, p) -> bool:
    return bool(contains_points(region, p[0], p[1]))


# -- closed disks --------------------------------------------------------------


def meets_mask(region: Region, xs, ys, rs) -> np.ndarray:
    """Which closed disks ``cb((x, y), r)`` intersect the region."""
    xs, ys, rs = (np.asarray(a, dtype=float) for a in (xs, ys, rs))
    hit = np.zeros(xs.shape, dtype=bool)
    for b in bands(region):
        d = np.hypot(xs - b.center.x, ys - b.center.y)
        hit |= _interval_meets(b, np.maximum(d - rs, 0.0), d + rs)
    return hit


def meets_closed_disk(region: Region, disk: Disk) -> bool:
    return bool(meets_mask(region, [disk.center.x], [disk.center.y], [disk.radius])[0])


def contains_closed_disk(region: Region, disk: Disk) -> bool:
    """``cb(disk) ⊆ region``; for unions, containment in a single part."""
    for b in bands(region):
        d = distance(disk.center, b.center)
        if _interval_inside(b, max(d - disk.radius, 0.0), d + disk.radius):
            return True
    return False


def within_open_disk(region: Region, disk: Disk) -> bool:
    """``region ⊆ ob(disk)``."""
    for b in bands(region):
        reach = distance(b.center, disk.center) + b.hi
        ok = reach <= disk.radius if b.open else reach < disk.radius
        if not ok:
            return False
    return True


# -- region versus region --------------------------------------------------------


def _bands_disjoint(a: Band, b: Band) -> bool:
    strict = not (a.open and b.open)
    d = distance(a.center, b.center)
    if a.center == b.center:
        # concentric: compare radial intervals
        if strict:
            return a.hi < b.lo or b.hi < a.lo
        return a.hi <= b.lo or b.hi <= a.lo
    sep = d > a.hi + b.hi if strict else d >= a.hi + b.hi
    if sep:
        return True
    # one band sitting inside the other's hole
    for p, q in ((a, b), (b, a)):
        if math.isfinite(p.lo) and p.lo > 0:
            if (d + q.hi < p.lo) if strict else (d + q.hi <= p.lo):
                return True
    return False


def regions_disjoint(r1: Region, r2: Region) -> bool:
    """Conservative disjointness test."""
    return all(_bands_disjoint(a, b) for a in bands(r1) for b in bands(r2))


def _band_within(inner: Band, outer: Band) -> bool:
    if inner.center != outer.center:
        # bound inner by its enclosing disk
        d = distance(inner.center, outer.center)
        return bool(_interval_inside(outer, max(d - inner.hi, 0.0), d + inner.hi))
    if inner.lo < 0:
        low_ok = 0.0 > outer.lo if outer.open else 0.0 >= outer.lo
    elif inner.open:
        low_ok = inner.lo >= outer.lo
    else:
        low_ok = inner.lo > outer.lo if outer.open else inner.lo >= outer.lo
    if inner.open:
        high_ok = inner.hi <= outer.hi
    else:
        high_ok = inner.hi < outer.hi if outer.open else inner.hi <= outer.hi
    return low_ok and high_ok


def region_within(inner: Region, outer: Region) -> bool:
    """Conservative ``inner ⊆ outer``: each part of ``inner`` inside one part of ``outer``."""
    return all(any(_band_within(a, b) for b in bands(outer)) for a in bands(inner))
