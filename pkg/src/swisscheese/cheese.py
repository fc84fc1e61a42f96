"""Finite abstract Swiss cheeses.

A :class:`Cheese` is a closed outer disk, an optional concentric open hole
(making it *annular*), and a list of deleted open disks. The associated set
is the outer closed disk minus the hole and every deleted open disk.

``tail_budget`` stands in for the disks of an infinite cheese that were
dropped when truncating it: it is a bound on their radius sum. It is added
to every radius sum and subtracted from every discrepancy, which is the
pessimistic direction for all the inequalities this package checks.

Cheeses are immutable; every operation returns a new one.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .geometry import Disk, Point, distance
from .regions import Region, meets_mask

__all__ = [
    "Cheese",
    "CheeseStats",
    "significant_indices",
    "membership",
    "membership_mask",
    "delta",
    "area_formula",
    "rho",
    "mu",
    "local_rho",
    "annular_rho",
    "annular_delta",
    "is_classical",
    "is_semiclassical",
    "remove_redundancy",
    "insert_disk",
    "delete_disk",
    "replace_disks",
    "stats",
    "pair_intersections",
]


@dataclass(frozen=True)
class Cheese:
    outer: Disk
    inner: tuple[Disk, ...] = ()
    hole: Disk | None = None
    tail_budget: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "inner", tuple(self.inner))
        if not isinstance(self.outer, Disk) or self.outer.radius <= 0:
            raise ValueError("outer disk must have positive radius")
        for d in self.inner:
            if not isinstance(d, Disk):
                raise TypeError(f"inner entries must be Disk, got {d!r}")
        if self.hole is not None:
            h = self.hole
            if h.center != self.outer.center:
                raise ValueError("hole must be concentric with the outer disk")
            if not 0 < h.radius < self.outer.radius:
                raise ValueError("hole radius must lie strictly between 0 and the outer radius")
        t = float(self.tail_budget)
        if not math.isfinite(t) or t < 0:
            raise ValueError(f"tail_budget must be finite and >= 0, got {t}")
        if t > self.outer.radius:
            # keeps tail**alpha a valid bound on the omitted alpha-sums
            raise ValueError("tail_budget may not exceed the outer radius")
        object.__setattr__(self, "tail_budget", t)

    @property
    def annular(self) -> bool:
        return self.hole is not None

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Inner disk centres and radii as read-only float arrays."""
        n = len(self.inner)
        xs = np.fromiter((d.center.x for d in self.inner), float, n)
        ys = np.fromiter((d.center.y for d in self.inner), float, n)
        rs = np.fromiter((d.radius for d in self.inner), float, n)
        for a in (xs, ys, rs):
            a.flags.writeable = False
        return xs, ys, rs

    def with_inner(self, inner: Sequence[Disk]) -> Cheese:
        return Cheese(self.outer, tuple(inner), self.hole, self.tail_budget)


@dataclass(frozen=True)
class CheeseStats:
    delta1: float
    delta2: float
    rho: float
    mu: float
    significant_count: int
    classical: bool
    semiclassical: bool
    annular_delta: float | None = None
    annular_rho: float | None = None


def significant_indices(c: Cheese) -> list[int]:
    return [i for i, d in enumerate(c.inner) if d.radius > 0]


def membership_mask(c: Cheese, xs, ys) -> np.ndarray:
    """Vectorised membership of points in the cheese's set."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    o = c.outer
    inside = np.hypot(xs - o.center.x, ys - o.center.y) <= o.radius
    if c.hole is not None:
        h = c.hole
        inside &= np.hypot(xs - h.center.x, ys - h.center.y) >= h.radius
    if not c.inner or xs.ndim != 1:
        for d in c.inner:
            if d.radius > 0:
                inside &= np.hypot(xs - d.center.x, ys - d.center.y) >= d.radius
        return inside
    # sort by x so each disk only tests the points in its x-window
    order = np.argsort(xs, kind="stable")
    sx = xs[order]
    dx, dy, dr = c.arrays
    # widened a little so rounding in cx +- r never drops a candidate
    pad = dr * 1e-9 + 1e-300
    los = np.searchsorted(sx, dx - dr - pad, side="left")
    his = np.searchsorted(sx, dx + dr + pad, side="right")
    for cx, cy, r, lo, hi in zip(dx.tolist(), dy.tolist(), dr.tolist(), los.tolist(), his.tolist()):
        if r > 0 and hi > lo:
            idx = order[lo:hi]
            inside[idx] &= np.hypot(xs[idx] - cx, ys[idx] - cy) >= r
    return inside


def membership(c: Cheese, p) -> bool:
    p = Point(float(p[0]), float(p[1]))
    if distance(p, c.outer.center) > c.outer.radius:
        return False
    if c.hole is not None and distance(p, c.hole.center) < c.hole.radius:
        return False
    return all(distance(p, d.center) >= d.radius for d in c.inner)


def delta(c: Cheese, alpha: float = 1.0) -> float:
    """Discrepancy of order ``alpha``: outer radius**alpha minus the deleted radii**alpha.

    Only the inner disks count. An annular hole is left out and handled by
    :func:`annular_delta` instead; :func:`area_formula` subtracts it when an
    area is wanted. The tail enters as ``tail_budget**alpha``.
    """
    if not alpha >= 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    _, _, rs = c.arrays
    # fsum: exactly rounded, so reordering disks never changes the value
    return math.fsum([c.outer.radius**alpha, *(-(rs**alpha)), -(c.tail_budget**alpha)])


def area_formula(c: Cheese) -> float:
    """``pi * (delta_2 - hole**2)``, the exact area of a semiclassical cheese with no tail."""
    hole = c.hole.radius**2 if c.hole is not None else 0.0
    return math.pi * (delta(c, 2) - hole)


def rho(c: Cheese) -> float:
    """Sum of the deleted radii (the hole excluded) plus the tail budget."""
    return math.fsum([*c.arrays[2], c.tail_budget])


def mu(c: Cheese) -> float:
    """Largest distance of a deleted-disk centre from the origin. Ignores the tail."""
    xs, ys, _ = c.arrays
    if xs.size == 0:
        return 0.0
    return float(np.max(np.hypot(xs, ys)))


def local_rho(c: Cheese, e: Region) -> float:
    """Radius sum over significant deleted disks whose closed disk meets ``e``, plus the tail."""
    xs, ys, rs = c.arrays
    hit = meets_mask(e, xs, ys, rs) & (rs > 0)
    return math.fsum([*rs[hit], c.tail_budget])


def annular_rho(c: Cheese) -> float:
    return math.fsum([*c.arrays[2], c.tail_budget])


def annular_delta(c: Cheese) -> float:
    if c.hole is None:
        raise ValueError("annular_delta needs an annular cheese")
    return math.fsum([c.outer.radius, -c.hole.radius, *(-2 * c.arrays[2]), -2 * c.tail_budget])


# -- classicality ---------------------------------------------------------------


def pair_intersections(xs, ys, rs, *, closed: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """Index pairs ``i < j`` of significant disks whose closed (or open) disks meet."""
    n = len(xs)
    if n < 2:
        empty = np.empty(0, dtype=int)
        return empty, empty
    d = np.hypot(xs[:, None] - xs[None, :], ys[:, None] - ys[None, :])
    rsum = rs[:, None] + rs[None, :]
    hit = d <= rsum if closed else d < rsum
    sig = rs > 0
    hit &= sig[:, None] & sig[None, :]
    return np.nonzero(np.triu(hit, k=1))


def _boundary_mask(c: Cheese, xs, ys, rs, *, closed: bool) -> np.ndarray:
    """Significant disks violating containment in the outer disk / avoidance of the hole."""
    o = c.outer
    d0 = np.hypot(xs - o.center.x, ys - o.center.y)
    if closed:
        bad = ~(d0 < o.radius - rs)
    else:
        bad = ~(d0 <= o.radius - rs)
    if c.hole is not None:
        h = c.hole
        d1 = np.hypot(xs - h.center.x, ys - h.center.y)
        bad |= ~(d1 > h.radius + rs) if closed else ~(d1 >= h.radius + rs)
    return bad & (rs > 0)


def is_classical(c: Cheese) -> bool:
    """Closed deleted disks pairwise disjoint and inside the open outer disk.

    For an annular cheese each closed deleted disk must also miss the closed
    hole, i.e. sit inside the open annulus.
    """
    xs, ys, rs = c.arrays
    if _boundary_mask(c, xs, ys, rs, closed=True).any():
        return False
    i, _ = pair_intersections(xs, ys, rs, closed=True)
    return i.size == 0


def is_semiclassical(c: Cheese) -> bool:
    """Open-disk version of :func:`is_classical`."""
    xs, ys, rs = c.arrays
    if _boundary_mask(c, xs, ys, rs, closed=False).any():
        return False
    i, _ = pair_intersections(xs, ys, rs, closed=False)
    return i.size == 0


# -- redundancy ------------------------------------------------------------------


def _misses_body(c: Cheese, xs, ys, rs) -> np.ndarray:
    """Open disks disjoint from the closed body (outer disk, minus the hole if annular)."""
    o = c.outer
    d0 = np.hypot(xs - o.center.x, ys - o.center.y)
    miss = d0 >= o.radius + rs
    if c.hole is not None:
        h = c.hole
        miss |= np.hypot(xs - h.center.x, ys - h.center.y) + rs <= h.radius
    return miss | (rs <= 0)


def _redundancy_free_order(c: Cheese) -> list[int]:
    """Indices of the disks kept by redundancy elimination, in output order."""
    xs, ys, rs = c.arrays
    drop = _misses_body(c, xs, ys, rs)
    # stable sort by non-increasing radius
    order = [int(i) for i in np.argsort(-rs, kind="stable") if not drop[i]]
    kept: list[int] = []
    kx = np.empty(len(order))
    ky = np.empty(len(order))
    kr = np.empty(len(order))
    for i in order:
        n = len(kept)
        if n:
            d = np.hypot(kx[:n] - xs[i], ky[:n] - ys[i])
            # ob(i) ⊆ ob(k) iff |z - w| <= s - r; kept radii are all >= r_i
            if np.any(d <= kr[:n] - rs[i]):
                continue
        kx[n], ky[n], kr[n] = xs[i], ys[i], rs[i]
        kept.append(i)
    return kept


def remove_redundancy(c: Cheese) -> Cheese:
    """Drop zero-radius disks and disks that cannot matter (missing the body or nested in another).

    The set is unchanged, the outer disk (and hole) are unchanged, and the
    survivors come out sorted by non-increasing radius. Works for annular
    cheeses too, where "missing the body" means lying in the hole or outside.
    """
    return c.with_inner([c.inner[i] for i in _redundancy_free_order(c)])


# -- list manipulation -------------------------------------------------------------


def _check_index(c: Cheese, at: int, *, allow_end: bool = False) -> None:
    n = len(c.inner)
    hi = n if allow_end else n - 1
    if not 0 <= at <= hi:
        raise IndexError(f"index {at} out of range for {n} deleted disks")


def insert_disk(c: Cheese, d: Disk, at: int) -> Cheese:
    _check_index(c, at, allow_end=True)
    inner = list(c.inner)
    inner.insert(at, d)
    return c.with_inner(inner)


def delete_disk(c: Cheese, at: int) -> Cheese:
    _check_index(c, at)
    inner = list(c.inner)
    del inner[at]
    return c.with_inner(inner)


def sorted_position(radii: Sequence[float], r: float) -> int:
    """First index keeping a non-increasing list non-increasing after inserting ``r``."""
    neg = [-x for x in radii]
    return bisect.bisect_left(neg, -r)


def replace_disks(c: Cheese, i: int, j: int, d: Disk) -> Cheese:
    """Delete disks ``i`` and ``j``, then insert ``d`` at its sorted position."""
    _check_index(c, i)
    _check_index(c, j)
    if i == j:
        raise ValueError("replace_disks needs two distinct indices")
    radii = [x.radius for x in c.inner]
    if any(a < b for a, b in zip(radii, radii[1:])):
        raise ValueError("replace_disks needs radii sorted non-increasing")
    inner = [x for k, x in enumerate(c.inner) if k not in (i, j)]
    at = sorted_position([x.radius for x in inner], d.radius)
    inner.insert(at, d)
    return c.with_inner(inner)


def stats(c: Cheese) -> CheeseStats:
    return CheeseStats(
        delta1=delta(c, 1),
        delta2=delta(c, 2),
        rho=rho(c),
        mu=mu(c),
        significant_count=len(significant_indices(c)),
        classical=is_classical(c),
        semiclassical=is_semiclassical(c),
        annular_delta=annular_delta(c) if c.annular else None,
        annular_rho=annular_rho(c) if c.annular else None,
    )
