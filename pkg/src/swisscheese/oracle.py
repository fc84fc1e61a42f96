"""Brute-force checkers, independent of the closed forms they validate.

Sampling uses numpy's Philox counter-based generator. Points come in fixed
chunks of :data:`CHUNK` and chunk ``k`` draws from ``Philox(seed).jumped(k)``,
so a run is reproducible bit-for-bit at a fixed seed regardless of how the
chunks are later split across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cheese as ch
from .cheese import Cheese
from .geometry import Disk, Point, open_in_open, pull_in_disk
from .regions import Region, contains_points

__all__ = [
    "SampleConfig",
    "AreaEstimate",
    "CheckResult",
    "sample_points",
    "mc_area",
    "containment_check",
    "equality_outside_region",
    "brute_min_enclosing",
    "brute_max_avoiding",
    "grid_min_enclosing",
    "grid_max_avoiding",
]

CHUNK = 1 << 17


@dataclass(frozen=True)
class SampleConfig:
    """``bounding_box=None`` means "the box around the cheese's outer disk".

    ``focus`` disks receive half the samples (uniform in their bounding
    boxes), which sharpens checks that only matter near a few disks.
    """

    n_points: int = 10_000
    seed: int = 0
    bounding_box: tuple[Point, Point] | None = None
    focus: tuple[Disk, ...] = ()

    def __post_init__(self):
        if self.n_points <= 0:
            raise ValueError("n_points must be positive")
        if self.bounding_box is not None:
            lo, hi = (Point(float(p[0]), float(p[1])) for p in self.bounding_box)
            if not (hi.x > lo.x and hi.y > lo.y):
                raise ValueError("bounding box must have positive width and height")
            object.__setattr__(self, "bounding_box", (lo, hi))
        object.__setattr__(self, "focus", tuple(self.focus))


@dataclass(frozen=True)
class AreaEstimate:
    value: float
    std_error: float
    n_points: int
    upper_bound_only: bool = False  # a positive tail makes the exact area unknowable


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: Point | None = None
    n_checked: int = 0

    def __bool__(self):
        return self.ok


def _box_of(d: Disk) -> tuple[Point, Point]:
    (x, y), r = d.center, d.radius
    return Point(x - r, y - r), Point(x + r, y + r)


def _uniform(gen: np.random.Generator, box, n: int):
    (x0, y0), (x1, y1) = box
    u = gen.random((2, n))
    return x0 + (x1 - x0) * u[0], y0 + (y1 - y0) * u[1]


def sample_points(cfg: SampleConfig, default_box) -> tuple[np.ndarray, np.ndarray]:
    """All ``cfg.n_points`` sample points, chunk by chunk from jumped Philox streams."""
    box = cfg.bounding_box or default_box
    xs, ys = [], []
    remaining, k = cfg.n_points, 0
    n_focus = cfg.n_points // 2 if cfg.focus else 0
    while remaining > 0:
        m = min(CHUNK, remaining)
        gen = np.random.Generator(np.random.Philox(cfg.seed).jumped(k))
        done = cfg.n_points - remaining
        take_focus = max(0, min(m, n_focus - done))
        if take_focus:
            which = gen.integers(len(cfg.focus), size=take_focus)
            fx, fy = np.empty(take_focus), np.empty(take_focus)
            for i, d in enumerate(cfg.focus):
                sel = which == i
                fx[sel], fy[sel] = _uniform(gen, _box_of(d), int(sel.sum()))
            xs.append(fx)
            ys.append(fy)
        if m - take_focus:
            x, y = _uniform(gen, box, m - take_focus)
            xs.append(x)
            ys.append(y)
        remaining -= m
        k += 1
    return np.concatenate(xs), np.concatenate(ys)


def mc_area(c: Cheese, cfg: SampleConfig) -> AreaEstimate:
    """Hit-or-miss area of the cheese's set over its bounding box; binomial standard error."""
    box = cfg.bounding_box or _box_of(c.outer)
    area = (box[1].x - box[0].x) * (box[1].y - box[0].y)
    hits, remaining, k = 0, cfg.n_points, 0
    while remaining > 0:
        m = min(CHUNK, remaining)
        gen = np.random.Generator(np.random.Philox(cfg.seed).jumped(k))
        x, y = _uniform(gen, box, m)
        hits += int(np.count_nonzero(ch.membership_mask(c, x, y)))
        remaining -= m
        k += 1
    p = hits / cfg.n_points
    return AreaEstimate(
        value=p * area,
        std_error=area * math.sqrt(p * (1 - p) / cfg.n_points),
        n_points=cfg.n_points,
        upper_bound_only=c.tail_budget > 0,
    )


def containment_check(sub: Cheese, sup: Cheese, cfg: SampleConfig) -> CheckResult:
    """Look for a sampled point of ``sub``'s set that is not in ``sup``'s. Probabilistic."""
    xs, ys = sample_points(cfg, _box_of(sub.outer))
    bad = ch.membership_mask(sub, xs, ys) & ~ch.membership_mask(sup, xs, ys)
    if bad.any():
        k = int(np.argmax(bad))
        return CheckResult(False, Point(float(xs[k]), float(ys[k])), xs.size)
    return CheckResult(True, None, xs.size)


def equality_outside_region(a: Cheese, b: Cheese, v: Region, cfg: SampleConfig) -> CheckResult:
    """Do the two sets agree at sampled points outside ``v``?"""
    (ax0, ay0), (ax1, ay1) = _box_of(a.outer)
    (bx0, by0), (bx1, by1) = _box_of(b.outer)
    box = (Point(min(ax0, bx0), min(ay0, by0)), Point(max(ax1, bx1), max(ay1, by1)))
    xs, ys = sample_points(cfg, box)
    outside = ~contains_points(v, xs, ys)
    bad = outside & (ch.membership_mask(a, xs, ys) != ch.membership_mask(b, xs, ys))
    if bad.any():
        k = int(np.argmax(bad))
        return CheckResult(False, Point(float(xs[k]), float(ys[k])), int(outside.sum()))
    return CheckResult(True, None, int(outside.sum()))


# -- extremal disks by search -------------------------------------------------------------


def _ternary(f, lo: float, hi: float, iters: int = 200, maximise: bool = False) -> float:
    sign = -1.0 if maximise else 1.0
    for _ in range(iters):
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if sign * f(m1) <= sign * f(m2):
            hi = m2
        else:
            lo = m1
        if hi - lo < 1e-16:
            break
    return (lo + hi) / 2


def brute_min_enclosing(d1: Disk, d2: Disk) -> Disk:
    """Smallest open disk covering both open disks, by ternary search along the centre segment."""
    if open_in_open(d2, d1):
        return d1
    if open_in_open(d1, d2):
        return d2
    (x1, y1), (x2, y2) = d1.center, d2.center

    def need(t):
        px, py = x1 + t * (x2 - x1), y1 + t * (y2 - y1)
        return max(math.hypot(px - x1, py - y1) + d1.radius, math.hypot(px - x2, py - y2) + d2.radius)

    t = _ternary(need, 0.0, 1.0)
    return Disk((x1 + t * (x2 - x1), y1 + t * (y2 - y1)), need(t))


def brute_max_avoiding(outer: Disk, obstacle: Disk) -> Disk:
    """Largest closed disk in ``cb(outer)`` missing ``ob(obstacle)``, searched on the centre line.

    The centre moves from ``outer.center`` directly away from the obstacle;
    the admissible radius is the smaller of the room left inside ``outer``
    and the clearance from the obstacle.
    """
    (x1, y1), (x2, y2) = outer.center, obstacle.center
    r1, r2 = outer.radius, obstacle.radius
    d = math.hypot(x1 - x2, y1 - y2)
    if d >= r1 + r2:
        return outer
    ux, uy = (x1 - x2) / d, (y1 - y2) / d

    def room(lam):
        return min(r1 - lam, d + lam - r2)

    lam = _ternary(room, 0.0, r1, maximise=True)
    return Disk((x1 + lam * ux, y1 + lam * uy), room(lam))


def _grid_refine(score, cx: float, cy: float, half: float, rounds: int = 45, n: int = 64):
    """Maximise ``score(x, y)`` (vectorised) by repeated grid zooming."""
    best = (cx, cy)
    for _ in range(rounds):
        g = np.linspace(-half, half, n)
        gx, gy = np.meshgrid(best[0] + g, best[1] + g)
        s = score(gx, gy)
        k = np.unravel_index(int(np.argmax(s)), s.shape)
        best = (float(gx[k]), float(gy[k]))
        half *= 0.3
    return best


def grid_min_enclosing(d1: Disk, d2: Disk) -> Disk:
    """2-D grid search over centres; slow, for cross-checking the line search."""

    def score(x, y):
        return -np.maximum(
            np.hypot(x - d1.center.x, y - d1.center.y) + d1.radius,
            np.hypot(x - d2.center.x, y - d2.center.y) + d2.radius,
        )

    span = math.hypot(d1.center.x - d2.center.x, d1.center.y - d2.center.y) + d1.radius + d2.radius
    mx, my = (d1.center.x + d2.center.x) / 2, (d1.center.y + d2.center.y) / 2
    x, y = _grid_refine(score, mx, my, span)
    return Disk((x, y), -float(score(np.array(x), np.array(y))))


def grid_max_avoiding(outer: Disk, obstacle: Disk) -> Disk:
    """2-D grid search counterpart of :func:`brute_max_avoiding`."""
    pull_in_disk(outer, obstacle)  # same preconditions

    def score(x, y):
        return np.minimum(
            outer.radius - np.hypot(x - outer.center.x, y - outer.center.y),
            np.hypot(x - obstacle.center.x, y - obstacle.center.y) - obstacle.radius,
        )

    x, y = _grid_refine(score, outer.center.x, outer.center.y, outer.radius)
    return Disk((x, y), max(float(score(np.array(x), np.array(y))), 0.0))
