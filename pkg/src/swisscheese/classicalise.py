"""Greedy rewriters that turn a cheese into a classical one.

Every step of every rewriter removes exactly one significant deleted disk:

* ``combine``: two deleted disks whose closed disks meet are replaced by the
  smallest open disk covering both open disks;
* ``pull_in``: a deleted disk whose closed disk escapes the open outer disk
  is removed after shrinking the outer disk away from it;
* ``annular_pull_in``: the annular analogue, where the hole grows or the
  outer disk shrinks instead.

So the number of steps never exceeds the initial number of significant
disks, and each step can only shrink the associated set. Each step is
checked against a potential: the linear discrepancy (``delta_1``, or the
annular one) must not go down, and if it stays put the quadratic one must
not go up.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import cheese as ch
from .cheese import Cheese
from .errors import InvariantViolation, PreconditionError
from .geometry import Annulus, Disk, Point, annular_pull_in, combine_disks, pull_in_disk
from .regions import (
    Band,
    Region,
    Union,
    bands,
    contains_closed_disk,
    dilate,
    meets_closed_disk,
    meets_mask,
    regions_disjoint,
    within_open_disk,
)

__all__ = [
    "ControllingPair",
    "ControllingCollection",
    "Step",
    "ClassicalisationReport",
    "ErrorSet",
    "error_set",
    "error_set_contained",
    "violation_range",
    "classicalise",
    "controlled_classicalise",
    "annular_classicalise",
    "annular_remove_redundancy",
]

# relative slack for "the potential did not move"
STEP_TOL = 1e-12
# slack for analytic containment of violation regions
CONTAIN_TOL = 1e-9


# -- controlling collections --------------------------------------------------------


@dataclass(frozen=True)
class ControllingPair:
    """A compact region ``K`` and a margin ``M``; ``U`` is the open ``M``-neighbourhood of ``K``."""

    k_region: Region
    margin: float

    def __post_init__(self):
        m = float(self.margin)
        if not (math.isfinite(m) and m > 0):
            raise ValueError(f"margin must be positive and finite, got {self.margin!r}")
        object.__setattr__(self, "margin", m)
        bands(self.k_region)  # type check

    @property
    def u_region(self) -> Region:
        return dilate(self.k_region, self.margin)


@dataclass(frozen=True)
class ControllingCollection:
    pairs: tuple[ControllingPair, ...]

    def __post_init__(self):
        pairs = tuple(self.pairs)
        if not pairs:
            raise ValueError("a controlling collection needs at least one pair")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self):
        return len(self.pairs)

    @property
    def v_region(self) -> Region:
        """Union of the dilated regions."""
        return Union(tuple(p.u_region for p in self.pairs))

    @property
    def f_region(self) -> Region:
        """Union of the controlling regions themselves."""
        return Union(tuple(p.k_region for p in self.pairs))

    def pairwise_disjoint(self) -> bool:
        us = [p.u_region for p in self.pairs]
        return all(
            regions_disjoint(us[i], us[j]) for i in range(len(us)) for j in range(i + 1, len(us))
        )


# -- reports ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    kind: str  # combine | pull_in | annular_pull_in
    indices: tuple[int, ...]
    result: Disk | Annulus
    delta1: float
    delta2: float
    annular_delta: float | None = None


@dataclass
class ClassicalisationReport:
    mode: str
    steps: list[Step] = field(default_factory=list)
    delta1_before: float = 0.0
    delta1_after: float = 0.0
    delta2_before: float = 0.0
    delta2_after: float = 0.0
    annular_delta_before: float | None = None
    annular_delta_after: float | None = None
    preserved_map: list[tuple[int, int]] = field(default_factory=list)
    assertions_checked: Counter = field(default_factory=Counter)
    initial_significant: int = 0
    redundant_removed: int = 0
    tail_budget: float = 0.0
    bounds: dict = field(default_factory=dict)

    @property
    def tail_caveat(self) -> bool:
        """True when classicality only covers the stored disks, not the omitted tail."""
        return self.tail_budget > 0

    def to_dict(self) -> dict:
        def disk_or_annulus(x):
            if isinstance(x, Disk):
                return {"cx": x.center.x, "cy": x.center.y, "r": x.radius}
            return {
                "cx": x.center.x,
                "cy": x.center.y,
                "r_inner": x.inner_radius,
                "r_outer": x.outer_radius,
            }

        return {
            "mode": self.mode,
            "steps": [
                {
                    "kind": s.kind,
                    "indices": list(s.indices),
                    "result": disk_or_annulus(s.result),
                    "delta1": s.delta1,
                    "delta2": s.delta2,
                    "annular_delta": s.annular_delta,
                }
                for s in self.steps
            ],
            "delta1_before": self.delta1_before,
            "delta1_after": self.delta1_after,
            "delta2_before": self.delta2_before,
            "delta2_after": self.delta2_after,
            "annular_delta_before": self.annular_delta_before,
            "annular_delta_after": self.annular_delta_after,
            "preserved_map": [list(p) for p in self.preserved_map],
            "assertions_checked": dict(sorted(self.assertions_checked.items())),
            "initial_significant": self.initial_significant,
            "redundant_removed": self.redundant_removed,
            "tail_budget": self.tail_budget,
            "tail_caveat": self.tail_caveat,
            "bounds": self.bounds,
        }


# -- error sets ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ErrorSet:
    pair_violations: tuple[tuple[int, int], ...]
    boundary_violations: tuple[int, ...]

    @property
    def empty(self) -> bool:
        return not self.pair_violations and not self.boundary_violations


def error_set(c: Cheese) -> ErrorSet:
    """Index pairs with meeting closed disks, and indices escaping the open outer disk.

    For annular cheeses a disk whose closed disk meets the closed hole is also
    a boundary violation.
    """
    xs, ys, rs = c.arrays
    i, j = ch.pair_intersections(xs, ys, rs, closed=True)
    bad = np.nonzero(ch._boundary_mask(c, xs, ys, rs, closed=True))[0]
    return ErrorSet(
        tuple((int(a), int(b)) for a, b in zip(i, j)),
        tuple(int(k) for k in bad),
    )


def _on_circle_candidates(center: Point, r: float, p: Point):
    """Nearest and farthest points of a circle from ``p`` (``None`` if ``p`` is the centre)."""
    dx, dy = p.x - center.x, p.y - center.y
    n = math.hypot(dx, dy)
    if n == 0:
        return None
    ux, uy = dx / n, dy / n
    return [
        Point(center.x + r * ux, center.y + r * uy),
        Point(center.x - r * ux, center.y - r * uy),
    ]


def _circle_corners(c1: Point, r1: float, c2: Point, r2: float) -> list[Point]:
    dx, dy = c2.x - c1.x, c2.y - c1.y
    d = math.hypot(dx, dy)
    if d == 0 or d > r1 + r2 or d < abs(r1 - r2):
        return []
    a = (r1 * r1 - r2 * r2 + d * d) / (2 * d)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    bx, by = c1.x + a * dx / d, c1.y + a * dy / d
    return [Point(bx - h * dy / d, by + h * dx / d), Point(bx + h * dy / d, by - h * dx / d)]


def _dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def _disk_range(c: Point, r: float, p: Point) -> tuple[float, float]:
    d = _dist(c, p)
    return max(d - r, 0.0), d + r


def _lens_range(d1: Disk, d2: Disk, p: Point):
    """Radial extent about ``p`` of ``cb(d1) ∩ cb(d2)``, or ``None`` if empty."""
    c1, r1, c2, r2 = d1.center, d1.radius, d2.center, d2.radius
    d = _dist(c1, c2)
    if d > r1 + r2:
        return None
    if d <= abs(r1 - r2):
        small = d1 if r1 <= r2 else d2
        return _disk_range(small.center, small.radius, p)
    inside1 = lambda q: _dist(q, c1) <= r1 * (1 + STEP_TOL) + 1e-300
    inside2 = lambda q: _dist(q, c2) <= r2 * (1 + STEP_TOL) + 1e-300
    cands = _circle_corners(c1, r1, c2, r2)
    for cc, rr, other in ((c1, r1, inside2), (c2, r2, inside1)):
        pts = _on_circle_candidates(cc, rr, p)
        if pts:
            cands += [q for q in pts if other(q)]
    dists = [_dist(q, p) for q in cands]
    lo = 0.0 if (_dist(p, c1) <= r1 and _dist(p, c2) <= r2) else min(dists)
    return lo, max(dists)


def _escape_range(dk: Disk, outer: Disk, p: Point):
    """Radial extent about ``p`` of ``cb(dk) \\ ob(outer)``, or ``None`` if empty."""
    ck, rk, c0, r0 = dk.center, dk.radius, outer.center, outer.radius
    d = _dist(ck, c0)
    if d + rk < r0:
        return None
    if d >= r0 + rk:
        return _disk_range(ck, rk, p)
    in_k = lambda q: _dist(q, ck) <= rk * (1 + STEP_TOL) + 1e-300
    out_0 = lambda q: _dist(q, c0) >= r0 * (1 - STEP_TOL)
    corners = _circle_corners(ck, rk, c0, r0)
    cands = list(corners)
    pts = _on_circle_candidates(ck, rk, p)
    if pts is None:
        cands.append(Point(ck.x + rk, ck.y))  # every point of this circle is equidistant
    else:
        cands += [q for q in pts if out_0(q)]
    pts = _on_circle_candidates(c0, r0, p)
    if pts is None:
        if corners or d + r0 <= rk:
            cands.append(Point(c0.x + r0, c0.y) if not corners else corners[0])
    else:
        cands += [q for q in pts if in_k(q)]
    dists = [_dist(q, p) for q in cands]
    lo = 0.0 if (_dist(p, ck) <= rk and _dist(p, c0) >= r0) else min(dists)
    return lo, max(dists)


def violation_range(c: Cheese, violation, center) -> tuple[float, float] | None:
    """Radial extent about ``center`` of one violation region.

    ``violation`` is a pair ``(i, j)`` (the lens of two closed disks) or a
    single index ``k`` (the part of closed disk ``k`` outside the open outer
    disk).
    """
    p = Point(float(center[0]), float(center[1]))
    if isinstance(violation, tuple):
        i, j = violation
        return _lens_range(c.inner[i], c.inner[j], p)
    return _escape_range(c.inner[violation], c.outer, p)


def _range_in_band(b: Band, lo: float, hi: float, tol: float) -> bool:
    return lo >= b.lo - tol and hi <= b.hi + tol


def _violation_in(c: Cheese, violation, f: Region, tol: float) -> bool:
    for b in bands(f):
        rng = violation_range(c, violation, b.center)
        if rng is None or _range_in_band(b, rng[0], rng[1], tol):
            return True
    return False


def error_set_contained(c: Cheese, f: Region, tol: float = CONTAIN_TOL) -> bool:
    """Is every violation region inside ``f``? Each region must fit in one part of ``f``."""
    es = error_set(c)
    return all(_violation_in(c, v, f, tol) for v in es.pair_violations) and all(
        _violation_in(c, k, f, tol) for k in es.boundary_violations
    )


# -- shared rewriting machinery ----------------------------------------------------------


class _State:
    """A cheese under rewriting plus, for each inner disk, the input index it came from."""

    def __init__(self, c: Cheese, origins: list[int | None]):
        self.c = c
        self.origins = origins

    def combine(self, i: int, j: int) -> Disk:
        new = combine_disks(self.c.inner[i], self.c.inner[j])
        rest = [k for k in range(len(self.c.inner)) if k not in (i, j)]
        at = ch.sorted_position([self.c.inner[k].radius for k in rest], new.radius)
        self.c = ch.replace_disks(self.c, i, j, new)
        origins = [self.origins[k] for k in rest]
        origins.insert(at, None)
        self.origins = origins
        return new

    def delete(self, k: int) -> None:
        self.c = ch.delete_disk(self.c, k)
        del self.origins[k]


def _pair_choice(c: Cheese, rng: np.random.Generator | None) -> tuple[int, int] | None:
    xs, ys, rs = c.arrays
    i, j = ch.pair_intersections(xs, ys, rs, closed=True)
    if i.size == 0:
        return None
    if rng is not None:
        k = int(rng.integers(i.size))
        return int(i[k]), int(j[k])
    d = np.hypot(xs[i] - xs[j], ys[i] - ys[j])
    merged = (rs[i] + rs[j] + d) / 2
    merged = np.where(d <= np.abs(rs[i] - rs[j]), np.maximum(rs[i], rs[j]), merged)
    k = int(np.argmax(merged))
    return int(i[k]), int(j[k])


def _boundary_choice(c: Cheese, rng: np.random.Generator | None) -> int | None:
    xs, ys, rs = c.arrays
    bad = np.nonzero(ch._boundary_mask(c, xs, ys, rs, closed=True))[0]
    if bad.size == 0:
        return None
    if rng is not None:
        return int(bad[int(rng.integers(bad.size))])
    return int(bad[0])


def _check_potential(
    report: ClassicalisationReport, before: tuple[float, float], after: tuple[float, float], scale: float
) -> None:
    """Primary potential up, or level with the secondary one not increasing."""
    tol = STEP_TOL * max(1.0, scale)
    (p0, s0), (p1, s1) = before, after
    report.assertions_checked["potential"] += 1
    if p1 < p0 - tol:
        raise InvariantViolation(f"discrepancy fell from {p0!r} to {p1!r}")
    if p1 <= p0 + tol and not s1 <= s0:
        raise InvariantViolation(
            f"discrepancy level ({p0!r} -> {p1!r}) but quadratic discrepancy rose {s0!r} -> {s1!r}"
        )


def _start_report(mode: str, c: Cheese) -> ClassicalisationReport:
    return ClassicalisationReport(
        mode=mode,
        delta1_before=ch.delta(c, 1),
        delta2_before=ch.delta(c, 2),
        annular_delta_before=ch.annular_delta(c) if c.annular else None,
        initial_significant=len(ch.significant_indices(c)),
        tail_budget=c.tail_budget,
    )


def _redundancy_pass(c: Cheese, report: ClassicalisationReport) -> _State:
    order = ch._redundancy_free_order(c)
    out = c.with_inner([c.inner[i] for i in order])
    report.redundant_removed = len(c.inner) - len(order)
    return _State(out, list(order))


def _finish(report: ClassicalisationReport, st: _State) -> tuple[Cheese, ClassicalisationReport]:
    c = st.c
    report.delta1_after = ch.delta(c, 1)
    report.delta2_after = ch.delta(c, 2)
    if c.annular:
        report.annular_delta_after = ch.annular_delta(c)
    report.preserved_map = [(o, k) for k, o in enumerate(st.origins) if o is not None]
    report.assertions_checked["step_bound"] += 1
    if len(report.steps) > report.initial_significant:
        raise InvariantViolation(
            f"{len(report.steps)} steps exceed the initial {report.initial_significant} significant disks"
        )
    return c, report


def _combine_step(st: _State, report: ClassicalisationReport, i: int, j: int, scale: float) -> Disk:
    before = (ch.delta(st.c, 1), ch.delta(st.c, 2))
    new = st.combine(i, j)
    after = (ch.delta(st.c, 1), ch.delta(st.c, 2))
    _check_potential(report, before, after, scale)
    report.steps.append(Step("combine", (i, j), new, after[0], after[1]))
    return new


# -- plain --------------------------------------------------------------------------------------


def classicalise(
    c: Cheese, *, rng: np.random.Generator | None = None
) -> tuple[Cheese, ClassicalisationReport]:
    """Rewrite ``c`` into a classical cheese whose set lies inside the set of ``c``.

    ``delta_1`` does not decrease. Pair violations are fixed before boundary
    violations; among pairs the one giving the largest combined disk goes
    first. Passing ``rng`` picks violations at random instead (the
    guarantees do not depend on the order).
    """
    if c.annular:
        raise PreconditionError(
            "classicalise takes plain cheeses; use annular_classicalise", "hole = ∅"
        )
    d1 = ch.delta(c, 1)
    if not d1 > 0:
        raise PreconditionError(f"delta_1 must be positive, got {d1!r}", "δ₁(A) > 0")
    report = _start_report("plain", c)
    st = _redundancy_pass(c, report)
    scale = c.outer.radius
    for _ in range(report.initial_significant + 1):
        pair = _pair_choice(st.c, rng)
        if pair is not None:
            _combine_step(st, report, *pair, scale)
            continue
        k = _boundary_choice(st.c, rng)
        if k is None:
            break
        before = (ch.delta(st.c, 1), ch.delta(st.c, 2))
        new_outer = pull_in_disk(st.c.outer, st.c.inner[k])
        st.c = Cheese(new_outer, st.c.inner, None, st.c.tail_budget)
        st.delete(k)
        after = (ch.delta(st.c, 1), ch.delta(st.c, 2))
        _check_potential(report, before, after, scale)
        report.steps.append(Step("pull_in", (k,), new_outer, after[0], after[1]))
    else:
        raise InvariantViolation("rewriter did not terminate within the step bound")
    report.assertions_checked["classical"] += 1
    if not ch.is_classical(st.c):
        raise InvariantViolation("rewriter stopped on a non-classical cheese")
    report.bounds = {"outer_radius_before": c.outer.radius, "outer_radius_after": st.c.outer.radius}
    return _finish(report, st)


# -- controlled --------------------------------------------------------------------------------


def _check_controlled_preconditions(c: Cheese, cc: ControllingCollection) -> None:
    single = len(cc) == 1
    for n, pair in enumerate(cc.pairs):
        u = pair.u_region
        bound = pair.margin if single else pair.margin / 2
        rho_u = ch.local_rho(c, u)
        if not rho_u < bound:
            cond = "ρ_U(A) < M" if single else "ρ_{U_n}(A) < M_n/2"
            raise PreconditionError(
                f"pair {n}: local radius sum {rho_u!r} is not below {bound!r}", cond
            )
        if not within_open_disk(u, c.outer):
            raise PreconditionError(f"pair {n}: dilated region leaves the open outer disk", "U_n ⊆ ob(a₀,r₀)")
    if not cc.pairwise_disjoint():
        raise PreconditionError("dilated regions are not pairwise disjoint", "U_n ∩ U_m = ∅")
    if not error_set_contained(c, cc.f_region):
        raise PreconditionError("some violation region is not inside the controlling regions", "E(A) ⊆ F(𝓒)")
    es = error_set(c)
    if es.boundary_violations:
        # the dilations sit inside the open outer disk, so an escape cannot be controlled
        raise PreconditionError(
            f"disk {es.boundary_violations[0]} escapes the open outer disk", "E(A) ⊆ F(𝓒)"
        )


def controlled_classicalise(
    c: Cheese, cc: ControllingCollection, *, rng: np.random.Generator | None = None
) -> tuple[Cheese, ClassicalisationReport]:
    """Classicalise while only touching disks inside the dilated regions.

    The outer disk never changes, and every disk whose closed disk misses
    ``V = ∪ U_n`` comes through untouched (``report.preserved_map`` records
    where each untouched disk went). The input is made redundancy-free
    first; preservation is stated relative to that.
    """
    if c.annular:
        raise PreconditionError("controlled mode takes plain cheeses", "hole = ∅")
    d1 = ch.delta(c, 1)
    if not d1 > 0:
        raise PreconditionError(f"delta_1 must be positive, got {d1!r}", "δ₁(A) > 0")
    report = _start_report("controlled", c)
    st = _redundancy_pass(c, report)
    _check_controlled_preconditions(st.c, cc)
    ks = [p.k_region for p in cc.pairs]
    us = [p.u_region for p in cc.pairs]
    f = cc.f_region
    rho_before = [ch.local_rho(st.c, u) for u in us]
    scale = c.outer.radius
    for _ in range(report.initial_significant + 1):
        pair = _pair_choice(st.c, rng)
        if pair is None:
            break
        i, j = pair
        report.assertions_checked["participants_meet_F"] += 1
        if not (meets_closed_disk(f, st.c.inner[i]) and meets_closed_disk(f, st.c.inner[j])):
            raise InvariantViolation(f"violating pair {pair} does not meet the controlling regions")
        new = _combine_step(st, report, i, j, scale)
        for m, (k, u) in enumerate(zip(ks, us)):
            if meets_closed_disk(k, new):
                report.assertions_checked["combined_disk_in_U"] += 1
                if not contains_closed_disk(u, new):
                    raise InvariantViolation(
                        f"combined disk {new} meets controlling region {m} but leaves its dilation"
                    )
    else:
        raise InvariantViolation("rewriter did not terminate within the step bound")
    if _boundary_choice(st.c, None) is not None:
        raise InvariantViolation("controlled rewrite produced a disk escaping the outer disk")
    report.assertions_checked["classical"] += 1
    if not ch.is_classical(st.c):
        raise InvariantViolation("rewriter stopped on a non-classical cheese")
    for m, u in enumerate(us):
        report.assertions_checked["local_rho_monotone"] += 1
        after = ch.local_rho(st.c, u)
        if after > rho_before[m] + STEP_TOL * max(1.0, rho_before[m]):
            raise InvariantViolation(f"local radius sum on U_{m} rose {rho_before[m]!r} -> {after!r}")
    out, report = _finish(report, st)
    # every input disk away from V must have survived verbatim
    v = cc.v_region
    kept = {o for o, _ in report.preserved_map}
    xs, ys, rs = c.arrays
    away = ~meets_mask(v, xs, ys, rs) & (rs > 0)
    redundant = set(range(len(c.inner))) - set(ch._redundancy_free_order(c))
    report.assertions_checked["preserved_outside_V"] += 1
    missing = [int(k) for k in np.nonzero(away)[0] if int(k) not in kept and int(k) not in redundant]
    if missing:
        raise InvariantViolation(f"disks {missing} lie outside V but were rewritten")
    return out, report


# -- annular ---------------------------------------------------------------------------------


def annular_remove_redundancy(c: Cheese) -> Cheese:
    """Redundancy removal for annular cheeses: drops disks missing the annulus or nested in others."""
    if not c.annular:
        raise PreconditionError("annular_remove_redundancy needs an annular cheese", "hole ≠ ∅")
    return ch.remove_redundancy(c)


def annular_classicalise(
    c: Cheese, *, rng: np.random.Generator | None = None
) -> tuple[Cheese, ClassicalisationReport]:
    """Classicalise an annular cheese, keeping it annular about the same centre.

    The annular discrepancy does not decrease; the outer radius can shrink
    and the hole can grow, each by at most twice the initial annular radius
    sum.
    """
    if not c.annular:
        raise PreconditionError("annular_classicalise needs an annular cheese", "hole ≠ ∅")
    da = ch.annular_delta(c)
    if not da > 0:
        raise PreconditionError(f"annular discrepancy must be positive, got {da!r}", "δᵃ(A) > 0")
    report = _start_report("annular", c)
    st = _redundancy_pass(c, report)
    scale = c.outer.radius
    pot = lambda x: (ch.annular_delta(x), ch.delta(x, 2))
    for _ in range(report.initial_significant + 1):
        pair = _pair_choice(st.c, rng)
        if pair is not None:
            i, j = pair
            before = pot(st.c)
            new = st.combine(i, j)
            after = pot(st.c)
            _check_potential(report, before, after, scale)
            report.steps.append(
                Step("combine", (i, j), new, ch.delta(st.c, 1), after[1], after[0])
            )
            continue
        k = _boundary_choice(st.c, rng)
        if k is None:
            break
        before = pot(st.c)
        outer, hole = st.c.outer, st.c.hole
        ann = annular_pull_in(Annulus(outer.center, hole.radius, outer.radius), st.c.inner[k])
        st.c = Cheese(
            Disk(outer.center, ann.outer_radius),
            st.c.inner,
            Disk(outer.center, ann.inner_radius),
            st.c.tail_budget,
        )
        st.delete(k)
        after = pot(st.c)
        report.assertions_checked["potential"] += 1
        if after[0] < before[0] - STEP_TOL * max(1.0, scale):
            raise InvariantViolation(f"annular discrepancy fell {before[0]!r} -> {after[0]!r}")
        report.steps.append(Step("annular_pull_in", (k,), ann, ch.delta(st.c, 1), after[1], after[0]))
    else:
        raise InvariantViolation("rewriter did not terminate within the step bound")
    report.assertions_checked["classical"] += 1
    if not ch.is_classical(st.c):
        raise InvariantViolation("rewriter stopped on a non-classical annular cheese")
    rho_a = ch.annular_rho(c)
    r0, r1 = c.outer.radius, c.hole.radius
    s0, s1 = st.c.outer.radius, st.c.hole.radius
    report.bounds = {
        "outer_radius": s0,
        "outer_radius_range": [r0 - 2 * rho_a, r0],
        "hole_radius": s1,
        "hole_radius_range": [r1, r1 + 2 * rho_a],
    }
    tol = CONTAIN_TOL
    report.assertions_checked["radius_bounds"] += 1
    if not (r0 - 2 * rho_a - tol <= s0 <= r0 + tol and r1 - tol <= s1 <= r1 + 2 * rho_a + tol):
        raise InvariantViolation(f"annulus radii out of range: {report.bounds}")
    return _finish(report, st)
