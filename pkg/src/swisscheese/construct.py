"""Cheese generators.

Random corpora and ring-packed annular cheeses feed the tests. The dyadic
multi-level construction goes further: after classicalisation the origin
stays in the set and the weighted radius sums around it remain summable.

The multi-level construction, for ``m = 1..levels``:

    gamma_m = (2m)**-m * eps           b_m = gamma_m * 2**(-m-2)   (b_1 = gamma_1 / 8)
    level 1 annulus:  hole 1/2,        outer 1
    level m annulus:  hole 2**-m,      outer (33/32) * 2**(1-m)
    K_m = {15/16 * 2**-m <= |z| <= 17/16 * 2**-m},   M_m = 3 gamma_m / 2**(m+2)
    E_m = {3/2 * 2**(-m-1) <= |z| <= 3/2 * 2**-m}

Adjacent level annuli overlap in ``[2**-m, (33/32) 2**-m]``, which sits inside
``K_m``. Each level's disks sit on up to three rings: an *outer* ring at
``(65/64) 2**(1-m)`` (for m >= 2), a *mid* ring at ``(3/2) 2**-m`` carrying
most of the budget, and an *inner* ring at ``(65/64) 2**-m``. The inner ring
of level m and the outer ring of level m+1 share a circle and are staggered
so that matching disks overlap, which gives the controlled rewriter real
work to do inside each ``K_m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cheese as ch
from .cheese import Cheese
from .classicalise import (
    ClassicalisationReport,
    ControllingCollection,
    ControllingPair,
    controlled_classicalise,
)
from .errors import InfeasiblePackingError, InvariantViolation, PreconditionError
from .geometry import Annulus, Disk, Point

__all__ = [
    "random_cheese",
    "random_annular_cheese",
    "synthetic_annular",
    "OFarrellParams",
    "OFarrellLayout",
    "HallstromReport",
    "gamma",
    "level_budget",
    "level_radii",
    "k_band",
    "e_band",
    "margin",
    "tail_budget",
    "hallstrom_tail",
    "ofarrell_layout",
    "ofarrell_classicalise",
]

EPS_MAX = 2.0**-5


# -- random corpora -------------------------------------------------------------------


def _centres(rng: np.random.Generator, n: int, lo: float, hi: float, overlap_bias: float):
    """Centres with radius uniform in area between ``lo`` and ``hi``, some clustered."""
    xs = np.empty(n)
    ys = np.empty(n)
    for k in range(n):
        if k and rng.random() < overlap_bias:
            j = int(rng.integers(k))
            # jitter near an earlier centre to provoke overlaps
            x, y = xs[j] + rng.normal(0, 0.03), ys[j] + rng.normal(0, 0.03)
        else:
            t = rng.uniform(0, 2 * math.pi)
            rad = math.sqrt(rng.uniform(lo * lo, hi * hi))
            x, y = rad * math.cos(t), rad * math.sin(t)
        xs[k], ys[k] = x, y
    return xs, ys


def random_cheese(seed: int, n_disks: int, overlap_bias: float = 0.3) -> Cheese:
    """Unit-disk cheese with ``n_disks`` deleted disks and ``delta_1 > 0``.

    Radii are drawn, then rescaled so they sum to ``1 - margin`` with
    ``margin ~ U(0.05, 0.5)``. ``overlap_bias`` in ``[0, 1]`` is the chance a
    centre is dropped next to an earlier one.
    """
    if n_disks < 0:
        raise ValueError("n_disks must be >= 0")
    if not 0 <= overlap_bias <= 1:
        raise ValueError("overlap_bias must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    outer = Disk((0.0, 0.0), 1.0)
    if n_disks == 0:
        return Cheese(outer)
    budget = 1.0 - rng.uniform(0.05, 0.5)
    raw = rng.pareto(2.5, n_disks) + 0.05
    rs = raw * (budget / raw.sum())
    xs, ys = _centres(rng, n_disks, 0.0, 1.0, overlap_bias)
    return Cheese(outer, tuple(Disk((float(x), float(y)), float(r)) for x, y, r in zip(xs, ys, rs)))


def random_annular_cheese(seed: int, n_disks: int, overlap_bias: float = 0.3) -> Cheese:
    """Annular unit-disk cheese with ``annular_delta > 0``; disks may touch the hole or rim."""
    if n_disks < 0:
        raise ValueError("n_disks must be >= 0")
    rng = np.random.default_rng(seed)
    r1 = float(rng.uniform(0.1, 0.6))
    outer = Disk((0.0, 0.0), 1.0)
    hole = Disk((0.0, 0.0), r1)
    if n_disks == 0:
        return Cheese(outer, (), hole)
    budget = (1.0 - r1) / 2 * (1.0 - rng.uniform(0.05, 0.5))
    raw = rng.pareto(2.5, n_disks) + 0.05
    rs = raw * (budget / raw.sum())
    xs, ys = _centres(rng, n_disks, 0.9 * r1, 1.0, overlap_bias)
    return Cheese(
        outer, tuple(Disk((float(x), float(y)), float(r)) for x, y, r in zip(xs, ys, rs)), hole
    )


# -- ring packing ------------------------------------------------------------------------------


def _ring(
    center: Point,
    radius: float,
    total: float,
    n: int,
    rng: np.random.Generator,
    phase: float | None = None,
    max_radius: float | None = None,
) -> list[Disk]:
    """``n`` disks evenly spaced on a circle with radii summing to at most ``total``."""
    w = rng.uniform(0.5, 1.0, n)
    rs = total * w / w.sum()
    if max_radius is not None and rs.max() > max_radius:
        rs *= max_radius / rs.max()
    if phase is None:
        phase = float(rng.uniform(0, 2 * math.pi))
    if n > 1:
        chord = 2 * radius * math.sin(math.pi / n)
        if not chord > 2 * rs.max():
            raise InfeasiblePackingError(
                f"{n} disks of radius up to {rs.max():.3g} do not fit on a circle of radius {radius:.3g}",
                "arc spacing > 2 max r",
            )
    out = []
    for k in range(n):
        t = phase + 2 * math.pi * k / n
        out.append(Disk((center.x + radius * math.cos(t), center.y + radius * math.sin(t)), float(rs[k])))
    return out


def synthetic_annular(
    center, r0: float, r1: float, budget: float, n_disks: int, seed: int
) -> Cheese:
    """Annular-classical cheese with exact radii ``r0``/``r1`` and annular radius sum below ``budget``.

    Disks sit evenly on the mid-circle ``(r0 + r1) / 2``; each radius is at
    most ``budget / n_disks``.
    """
    center = Point(float(center[0]), float(center[1]))
    if not r0 > r1 > 0:
        raise PreconditionError(f"need r0 > r1 > 0, got {r0}, {r1}", "r₀ > r₁ > 0")
    if not 0 < budget < (r0 - r1) / 2:
        raise PreconditionError(f"budget {budget} must lie in (0, {(r0 - r1) / 2})", "0 < budget < (r₀−r₁)/2")
    if n_disks < 1:
        raise PreconditionError("n_disks must be >= 1", "n ≥ 1")
    rng = np.random.default_rng(seed)
    # shave the budget so the sum stays strictly below it
    share = budget * rng.uniform(0.5, 0.95)
    disks = _ring(center, (r0 + r1) / 2, share, n_disks, rng, max_radius=share / n_disks)
    c = Cheese(Disk(center, r0), tuple(sorted(disks, key=lambda d: -d.radius)), Disk(center, r1))
    if not ch.is_classical(c) or not ch.annular_rho(c) < budget:
        raise InfeasiblePackingError("ring packing failed the annular classicality check", "classical")
    return c


# -- multi-level construction -------------------------------------------------------------------


def gamma(m: int, eps: float) -> float:
    return (2.0 * m) ** (-m) * eps


def level_budget(m: int, eps: float) -> float:
    """Bound on the annular radius sum of level ``m``."""
    return gamma(m, eps) * 2.0 ** (-m - 2)


def level_radii(m: int) -> tuple[float, float]:
    """(outer, hole) radii of level ``m``; exact dyadics."""
    if m == 1:
        return 1.0, 0.5
    return math.ldexp(33 / 32, 1 - m), math.ldexp(1.0, -m)


def k_band(m: int) -> Annulus:
    return Annulus((0.0, 0.0), math.ldexp(15 / 16, -m), math.ldexp(17 / 16, -m))


def e_band(m: int) -> Annulus:
    return Annulus((0.0, 0.0), math.ldexp(1.5, -m - 1), math.ldexp(1.5, -m))


def margin(m: int, eps: float) -> float:
    return 3 * gamma(m, eps) / 2.0 ** (m + 2)


def tail_budget(levels: int, eps: float, terms: int = 60) -> float:
    """Sum of the level budgets beyond ``levels`` (the series converges superexponentially)."""
    return math.fsum(level_budget(m, eps) for m in range(levels + 1, levels + 1 + terms))


def hallstrom_tail(levels: int, eps: float) -> float:
    """``sum_{m > levels} m**m * (3/2) b_m``, which telescopes to ``eps * 4**-levels / 8``."""
    return eps * 4.0 ** (-levels) / 8


@dataclass(frozen=True)
class OFarrellParams:
    epsilon: float = 2.0**-6
    levels: int = 4
    disks_per_level: int = 6
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.epsilon < EPS_MAX:
            raise PreconditionError(f"epsilon must lie in (0, 2^-5), got {self.epsilon!r}", "0 < ε < 2⁻⁵")
        if int(self.levels) != self.levels or self.levels < 1:
            raise PreconditionError(f"levels must be a positive integer, got {self.levels!r}", "levels ≥ 1")
        if int(self.disks_per_level) != self.disks_per_level or self.disks_per_level < 1:
            raise PreconditionError("disks_per_level must be a positive integer", "disks_per_level ≥ 1")


@dataclass(frozen=True)
class OFarrellLayout:
    merged: Cheese
    controlling: ControllingCollection
    e_bands: tuple[Annulus, ...]
    gamma: tuple[float, ...]
    levels: tuple[Cheese, ...]
    params: OFarrellParams

    @property
    def k_bands(self) -> tuple[Annulus, ...]:
        return tuple(p.k_region for p in self.controlling.pairs)

    @property
    def margins(self) -> tuple[float, ...]:
        return tuple(p.margin for p in self.controlling.pairs)

    def w_region(self, m: int):
        """Union of the level-``m`` and level-``m+1`` annuli (just level ``m`` at the last level)."""
        from .regions import Union

        parts = []
        for lv in (m, m + 1):
            if lv <= len(self.levels):
                c = self.levels[lv - 1]
                parts.append(Annulus(c.outer.center, c.hole.radius, c.outer.radius))
        return Union(tuple(parts))


def _staggered(partners: list[Disk], radius: float, total: float, rng: np.random.Generator) -> list[Disk]:
    """Disks on the circle of ``partners``, each overlapping its partner without nesting."""
    w = rng.uniform(0.5, 1.0, len(partners))
    rs = total * w / w.sum()
    out = []
    for p, r in zip(partners, rs):
        # centre distance max(r, s) lies strictly between |r - s| and r + s
        chord = max(float(r), p.radius)
        t = math.atan2(p.center.y, p.center.x) + 2 * math.asin(chord / (2 * radius))
        out.append(Disk((radius * math.cos(t), radius * math.sin(t)), float(r)))
    return out


def _level_disks(p: OFarrellParams) -> list[list[Disk]]:
    eps, n = p.epsilon, p.disks_per_level
    origin = Point(0.0, 0.0)
    levels: list[list[Disk]] = []
    prev_inner: list[Disk] = []
    for m in range(1, p.levels + 1):
        rng = np.random.default_rng([p.seed, m])
        b = level_budget(m, eps)
        disks: list[Disk] = []
        if m >= 2:
            # this level's outer ring shares the previous level's inner-ring circle
            outer_total = 0.4 * b * rng.uniform(0.9, 1.0)
            disks += _staggered(prev_inner, math.ldexp(65 / 64, 1 - m), outer_total, rng)
        inner_total = 0.25 * level_budget(m + 1, eps) * rng.uniform(0.9, 1.0)
        inner = _ring(origin, math.ldexp(65 / 64, -m), inner_total, n, rng)
        used = math.fsum(d.radius for d in disks) + math.fsum(d.radius for d in inner)
        disks += _ring(origin, math.ldexp(1.5, -m), 0.85 * b - used, n, rng)
        disks += inner
        prev_inner = inner
        levels.append(disks)
    return levels


def ofarrell_layout(p: OFarrellParams) -> OFarrellLayout:
    """Build the truncated multi-level cheese with its controlling pairs and bands."""
    eps = p.epsilon
    per_level = _level_disks(p)
    level_cheeses = []
    for m, disks in enumerate(per_level, start=1):
        r0, r1 = level_radii(m)
        c = Cheese(Disk((0.0, 0.0), r0), tuple(sorted(disks, key=lambda d: -d.radius)), Disk((0.0, 0.0), r1))
        if not ch.is_classical(c):
            raise InfeasiblePackingError(f"level {m} is not annular-classical", "classical")
        if not ch.annular_rho(c) < level_budget(m, eps):
            raise InfeasiblePackingError(f"level {m} overspends its budget", "ρᵃ(A⁽ᵐ⁾) < γ_m 2^{-m-2}")
        level_cheeses.append(c)
    merged = Cheese(
        Disk((0.0, 0.0), 1.0),
        tuple(d for disks in per_level for d in disks),
        None,
        tail_budget(p.levels, eps),
    )
    if not ch.membership(merged, (0.0, 0.0)):
        raise InvariantViolation("origin is not in the merged set")
    if not ch.rho(merged) < eps:
        raise InvariantViolation(f"merged radius sum {ch.rho(merged)!r} is not below epsilon")
    ms = range(1, p.levels + 1)
    cc = ControllingCollection(tuple(ControllingPair(k_band(m), margin(m, eps)) for m in ms))
    return OFarrellLayout(
        merged=merged,
        controlling=cc,
        e_bands=tuple(e_band(m) for m in ms),
        gamma=tuple(gamma(m, eps) for m in ms),
        levels=tuple(level_cheeses),
        params=p,
    )


@dataclass(frozen=True)
class HallstromReport:
    epsilon: float
    levels: int
    rho_e: tuple[float, ...]  # local radius sum over E_m, tail included
    weighted: tuple[float, ...]  # m**m * rho_e[m-1]
    partial_sum: float
    tail_bound: float
    total: float

    @property
    def ok(self) -> bool:
        return self.total <= self.epsilon

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "levels": self.levels,
            "rho_e": list(self.rho_e),
            "weighted": list(self.weighted),
            "partial_sum": self.partial_sum,
            "tail_bound": self.tail_bound,
            "total": self.total,
            "ok": self.ok,
        }


def hallstrom_report(b: Cheese, p: OFarrellParams) -> HallstromReport:
    rho_e = tuple(ch.local_rho(b, e_band(m)) for m in range(1, p.levels + 1))
    weighted = tuple(float(m) ** m * r for m, r in enumerate(rho_e, start=1))
    partial = math.fsum(weighted)
    tail = hallstrom_tail(p.levels, p.epsilon)
    return HallstromReport(p.epsilon, p.levels, rho_e, weighted, partial, tail, partial + tail)


def ofarrell_classicalise(
    p: OFarrellParams,
) -> tuple[Cheese, ClassicalisationReport, HallstromReport, OFarrellLayout]:
    """Build the layout, classicalise it locally, then check the weighted band sum.

    Raises :class:`InvariantViolation` if the origin leaves the set or if
    either the radius sum or the weighted sum fails its epsilon bound.
    """
    layout = ofarrell_layout(p)
    b, report = controlled_classicalise(layout.merged, layout.controlling)
    if not ch.membership(b, (0.0, 0.0)):
        raise InvariantViolation("origin left the set during classicalisation")
    if not ch.rho(b) < p.epsilon:
        raise InvariantViolation("classicalised radius sum is not below epsilon")
    h = hallstrom_report(b, p)
    if not h.ok:
        raise InvariantViolation(f"weighted band sum {h.total!r} exceeds epsilon {p.epsilon!r}")
    return b, report, h, layout
