"""Acceptance criteria 1-7.

Each ``criterion_*`` function returns a :class:`Verdict`; the pytest wrappers
print one PASS/FAIL line per criterion and then assert. Run this file
directly (``python3 tests/test_acceptance.py``) for the lines alone.
"""

from __future__ import annotations

import math
import subprocess
import sys
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pytest

from swisscheese import cheese as ch
from swisscheese import io
from swisscheese.cheese import Cheese
from swisscheese.classicalise import (
    ControllingCollection,
    ControllingPair,
    annular_classicalise,
    classicalise,
    controlled_classicalise,
    error_set_contained,
)
from swisscheese.construct import (
    OFarrellParams,
    e_band,
    level_budget,
    ofarrell_classicalise,
    ofarrell_layout,
    random_annular_cheese,
    random_cheese,
    synthetic_annular,
)
from swisscheese.errors import InvariantViolation
from swisscheese.geometry import Disk, combine_disks, pull_in_disk
from swisscheese.oracle import (
    SampleConfig,
    brute_max_avoiding,
    brute_min_enclosing,
    containment_check,
    equality_outside_region,
    mc_area,
)
from swisscheese.regions import meets_closed_disk, region_within, regions_disjoint
from swisscheese.svg import render_svg

EPS = 2.0**-6


@dataclass
class Verdict:
    name: str
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0
    budget: float | None = None

    def fail(self, msg: str) -> None:
        if len(self.failures) < 20:
            self.failures.append(msg)

    @property
    def ok(self) -> bool:
        return not self.failures and (self.budget is None or self.seconds < self.budget)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        limit = f" < {self.budget:g}s" if self.budget is not None else ""
        extra = "; ".join(self.notes + self.failures[:3])
        return f"{status} {self.name} [{self.seconds:.2f}s{limit}] {extra}".rstrip()


def _timed(v: Verdict, fn) -> Verdict:
    t0 = time.perf_counter()
    fn(v)
    v.seconds = time.perf_counter() - t0
    return v


# -- 1: extremal disks against brute force ---------------------------------------------------------


def _c1(v: Verdict) -> None:
    rng = np.random.default_rng(101)
    worst_r = worst_c = 0.0
    for _ in range(1000):
        x1, y1, x2, y2 = rng.uniform(-3, 3, 4)
        r1, r2 = rng.uniform(0.01, 3, 2)
        a, b = Disk((x1, y1), r1), Disk((x2, y2), r2)
        got, want = combine_disks(a, b), brute_min_enclosing(a, b)
        worst_r = max(worst_r, abs(got.radius - want.radius))
        worst_c = max(worst_c, math.dist(got.center, want.center))
    for _ in range(1000):
        x, y = rng.uniform(-3, 3, 2)
        r1 = rng.uniform(0.5, 3)
        r2 = r1 * rng.uniform(0.01, 0.95)
        d = r1 - r2 + rng.uniform(1e-6, 1) * 2 * r2 * (1 - 1e-9)
        t = rng.uniform(0, 2 * math.pi)
        outer, obs = Disk((x, y), r1), Disk((x + d * math.cos(t), y + d * math.sin(t)), r2)
        got, want = pull_in_disk(outer, obs), brute_max_avoiding(outer, obs)
        worst_r = max(worst_r, abs(got.radius - want.radius))
        worst_c = max(worst_c, math.dist(got.center, want.center))
    if worst_r > 1e-9:
        v.fail(f"radius gap {worst_r:.2e}")
    if worst_c > 1e-8:
        v.fail(f"centre gap {worst_c:.2e}")
    v.notes.append(f"max radius gap {worst_r:.1e}, max centre gap {worst_c:.1e}")

    # equality iff tangency, both directions; axis-aligned so tangency is exact
    axes = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    for k in range(400):
        r1, r2 = rng.uniform(0.1, 3), rng.uniform(0.01, 1)
        ax = axes[k % 4]
        for s in (1.0, rng.uniform(0.3, 0.99)):
            dist = s * (r1 + r2)
            b = Disk((dist * ax[0], dist * ax[1]), r2)
            a = Disk((0, 0), r1)
            if dist <= abs(r1 - r2):
                continue  # nested: combining just returns the larger disk
            tangent = dist == r1 + r2
            equal = abs(combine_disks(a, b).radius - (r1 + r2)) <= 1e-12 * (r1 + r2)
            if tangent != equal:
                v.fail(f"combine equality mismatch at r1={r1}, r2={r2}, d={dist}")
    for k in range(400):
        r1 = rng.uniform(1, 3)
        r2 = r1 * rng.uniform(0.05, 0.9)
        ax = axes[k % 4]
        for extra in (0.0, rng.uniform(0.01, 1.9) * r2):
            dist = r1 - r2 + extra
            if extra == 0.0 and dist + r2 != r1:
                continue  # rounding broke the exact tangency
            a, b = Disk((0, 0), r1), Disk((dist * ax[0], dist * ax[1]), r2)
            tangent = extra == 0.0
            equal = abs(pull_in_disk(a, b).radius - (r1 - r2)) <= 1e-12 * r1
            if tangent != equal:
                v.fail(f"pull-in equality mismatch at r1={r1}, r2={r2}, d={dist}")


def criterion_1() -> Verdict:
    return _timed(Verdict("C1 extremal-disk oracles", budget=10.0), _c1)


# -- 2: plain classicalisation --------------------------------------------------------------------------


def _c2(v: Verdict) -> None:
    rng = np.random.default_rng(202)
    worst_drop = 0.0
    for seed in range(1000):
        n = int(rng.integers(5, 201))
        bias = float(rng.uniform(0, 1))
        c = random_cheese(seed, n, bias)
        order = np.random.default_rng(seed) if seed % 2 else None
        b, rep = classicalise(c, rng=order)
        if not ch.is_classical(b):
            v.fail(f"seed {seed}: output not classical")
        drop = ch.delta(c, 1) - ch.delta(b, 1)
        worst_drop = max(worst_drop, drop)
        if drop > 1e-9:
            v.fail(f"seed {seed}: delta_1 fell by {drop:.2e}")
        if len(rep.steps) > n:
            v.fail(f"seed {seed}: {len(rep.steps)} steps for {n} disks")
        res = containment_check(b, c, SampleConfig(10_000, seed))
        if not res:
            v.fail(f"seed {seed}: containment witness {res.witness}")
    v.notes.append(f"1000 cheeses, worst delta_1 drop {worst_drop:.1e}")


def criterion_2() -> Verdict:
    return _timed(Verdict("C2 classicalisation suite", budget=60.0), _c2)


# -- 3: annular --------------------------------------------------------------------------------------------


def _c3(v: Verdict) -> None:
    rng = np.random.default_rng(303)
    for seed in range(200):
        n = int(rng.integers(1, 120))
        c = random_annular_cheese(seed, n, float(rng.uniform(0, 1)))
        b, _ = annular_classicalise(c, rng=np.random.default_rng(seed) if seed % 2 else None)
        rho_a = ch.annular_rho(c)
        r0, r1 = c.outer.radius, c.hole.radius
        if not (b.annular and ch.is_classical(b)):
            v.fail(f"seed {seed}: not annular-classical")
        if ch.annular_delta(b) < ch.annular_delta(c) - 1e-9:
            v.fail(f"seed {seed}: annular delta fell")
        if not r0 - 2 * rho_a - 1e-9 <= b.outer.radius <= r0 + 1e-9:
            v.fail(f"seed {seed}: outer radius {b.outer.radius} out of range")
        if not r1 - 1e-9 <= b.hole.radius <= r1 + 2 * rho_a + 1e-9:
            v.fail(f"seed {seed}: hole radius {b.hole.radius} out of range")
        if b.outer.center != c.outer.center or b.hole.center != c.hole.center:
            v.fail(f"seed {seed}: centre moved")
    v.notes.append("200 cheeses")


def criterion_3() -> Verdict:
    return _timed(Verdict("C3 annular suite"), _c3)


# -- 4: controlled -----------------------------------------------------------------------------------------


def cluster_fixture(seed: int) -> tuple[Cheese, ControllingCollection]:
    """Overlapping clusters inside small controlling disks, plus untouched classical background disks."""
    rng = np.random.default_rng([404, seed])
    k = int(rng.integers(1, 5))
    phase = rng.uniform(0, 2 * math.pi)
    disks, pairs = [], []
    for i in range(k):
        t = phase + 2 * math.pi * i / k
        cx, cy = 0.55 * math.cos(t), 0.55 * math.sin(t)
        for _ in range(int(rng.integers(2, 4))):
            dx, dy = rng.uniform(-0.014, 0.014, 2)
            disks.append(Disk((cx + dx, cy + dy), float(rng.uniform(0.005, 0.015))))
        pairs.append(ControllingPair(Disk((cx, cy), 0.04), 0.12))
    # background disks well clear of every U and of each other
    for j in range(8):
        t = phase + 2 * math.pi * (j + 0.5) / 8
        disks.append(Disk((0.88 * math.cos(t), 0.88 * math.sin(t)), float(rng.uniform(0.01, 0.04))))
    disks.append(Disk((0.0, 0.0), 0.1))
    disks.sort(key=lambda d: -d.radius)
    return Cheese(Disk((0, 0), 1), tuple(disks)), ControllingCollection(tuple(pairs))


def tangent_fixture() -> tuple[Cheese, ControllingCollection]:
    c = Cheese(Disk((0, 0), 2), (Disk((0.3, 0.5), 0.2), Disk((0.7, 0.5), 0.2), Disk((-1.2, 0), 0.2)))
    return c, ControllingCollection((ControllingPair(Disk((0.5, 0.5), 0.05), 0.9),))


def _check_controlled(v: Verdict, tag: str, a: Cheese, cc: ControllingCollection, seed: int) -> None:
    if not error_set_contained(a, cc.f_region):
        v.fail(f"{tag}: fixture error set not inside F")
        return
    try:
        b, rep = controlled_classicalise(a, cc)
    except InvariantViolation as e:
        v.fail(f"{tag}: runtime assertion fired: {e}")
        return
    if not ch.is_classical(b):
        v.fail(f"{tag}: not classical")
    v_region = cc.v_region
    kept = set(b.inner)
    for d in a.inner:
        if d.radius > 0 and not meets_closed_disk(v_region, d) and d not in kept:
            v.fail(f"{tag}: disk {d} outside V was changed")
    res = equality_outside_region(a, b, v_region, SampleConfig(10_000, seed))
    if not res:
        v.fail(f"{tag}: sets differ outside V at {res.witness}")
    for m, p in enumerate(cc.pairs):
        if ch.local_rho(b, p.u_region) > ch.local_rho(a, p.u_region):
            v.fail(f"{tag}: local radius sum on U_{m + 1} rose")
    if rep.assertions_checked["preserved_outside_V"] < 1:
        v.fail(f"{tag}: preservation assertion did not run")


def _c4(v: Verdict) -> None:
    n = 0
    a, cc = tangent_fixture()
    _check_controlled(v, "tangent", a, cc, 0)
    n += 1
    for seed in range(60):
        a, cc = cluster_fixture(seed)
        _check_controlled(v, f"cluster {seed}", a, cc, seed)
        n += 1
    for levels in (1, 2, 3):
        for seed in range(5):
            layout = ofarrell_layout(OFarrellParams(EPS, levels, seed=seed))
            _check_controlled(v, f"dyadic L={levels} s={seed}", layout.merged, layout.controlling, seed)
            n += 1
    v.notes.append(f"{n} fixtures")


def criterion_4() -> Verdict:
    return _timed(Verdict("C4 controlled suite"), _c4)


# -- 5: the dyadic construction ------------------------------------------------------------------------


def _c5(v: Verdict) -> None:
    totals = []
    for levels in (4, 5, 6):
        p = OFarrellParams(EPS, levels, seed=0)
        try:
            b, _, h, layout = ofarrell_classicalise(p)
        except InvariantViolation as e:
            v.fail(f"L={levels}: {e}")
            continue
        tag = f"L={levels}"
        if not ch.rho(b) < EPS:
            v.fail(f"{tag}: rho(B) = {ch.rho(b)!r}")
        if not ch.membership(b, (0.0, 0.0)):
            v.fail(f"{tag}: origin deleted")
        us = [pp.u_region for pp in layout.controlling.pairs]
        for m in range(1, levels + 1):
            w = layout.w_region(m)
            bound = 1.5 * level_budget(m, EPS)
            for name, c in (("A", layout.merged), ("B", b)):
                if not ch.local_rho(c, w) < bound:
                    v.fail(f"{tag}: rho_W{m}({name}) = {ch.local_rho(c, w)!r} >= {bound!r}")
            if not region_within(us[m - 1], e_band(m)):
                v.fail(f"{tag}: U_{m} not inside E_{m}")
            for j in range(m + 1, levels + 1):
                if not regions_disjoint(us[m - 1], us[j - 1]):
                    v.fail(f"{tag}: U_{m} meets U_{j}")
        # independent rescan of the output against each band
        weighted = []
        for m in range(1, levels + 1):
            band = e_band(m)
            rho_e = math.fsum(d.radius for d in b.inner if meets_closed_disk(band, d)) + b.tail_budget
            weighted.append(float(m) ** m * rho_e)
        total = math.fsum(weighted) + h.tail_bound
        if not (total <= EPS and h.total <= EPS):
            v.fail(f"{tag}: weighted sum {total!r} > eps")
        if abs(total - h.total) > 1e-15:
            v.fail(f"{tag}: rescan {total!r} disagrees with report {h.total!r}")
        totals.append(f"L={levels}: {h.total:.3e}")
    v.notes.append("weighted sums " + ", ".join(totals) + f" <= {EPS}")


def criterion_5() -> Verdict:
    return _timed(Verdict("C5 dyadic construction", budget=30.0), _c5)


# -- 6: area identity ----------------------------------------------------------------------------------------


def area_fixtures() -> list[Cheese]:
    out = []
    for seed in range(35):
        c, _ = classicalise(random_cheese(600 + seed, 5 + seed, 0.5))
        out.append(c)
    rng = np.random.default_rng(606)
    for _ in range(15):
        # semiclassical: two externally tangent holes and one internally tangent hole
        r1, r2 = rng.uniform(0.1, 0.3, 2)
        x = float(rng.uniform(-0.3, 0.0))
        r3 = float(rng.uniform(0.05, 0.15))
        out.append(
            Cheese(
                Disk((0, 0), 1),
                (Disk((x, 0), r1), Disk((x + r1 + r2, 0), r2), Disk((0, 1 - r3), r3)),
            )
        )
    return out


def _c6(v: Verdict) -> None:
    fixtures = area_fixtures()
    reruns = 0
    for i, c in enumerate(fixtures):
        if not ch.is_semiclassical(c):
            v.fail(f"fixture {i} is not semiclassical")
            continue
        want = ch.area_formula(c)
        est = mc_area(c, SampleConfig(1_000_000, seed=i))
        if abs(want - est.value) > 3 * est.std_error:
            reruns += 1
            est = mc_area(c, SampleConfig(1_000_000, seed=10_000 + i))
            if abs(want - est.value) > 3 * est.std_error:
                v.fail(f"fixture {i}: {abs(want - est.value) / est.std_error:.2f} sigma")
    v.notes.append(f"{len(fixtures)} fixtures, {reruns} reruns")


def criterion_6() -> Verdict:
    return _timed(Verdict("C6 area identity"), _c6)


# -- 7: determinism and round-trip ---------------------------------------------------------------------------


def _cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "swisscheese", *args], capture_output=True, text=True, check=False
    )


def _c7(v: Verdict) -> None:
    gens = {
        "random": lambda: random_cheese(7, 50, 0.4),
        "annular": lambda: random_annular_cheese(7, 30),
        "synthetic": lambda: synthetic_annular((0.25, 0), 1, 0.5, 0.01, 5, 7),
        "dyadic": lambda: ofarrell_layout(OFarrellParams(EPS, 5, seed=7)).merged,
    }
    fixtures = []
    for name, g in gens.items():
        a, b = g(), g()
        if io.dumps(a) != io.dumps(b) or render_svg(a) != render_svg(b):
            v.fail(f"generator {name} not deterministic")
        fixtures.append(a)
    fixtures += [random_cheese(s, 60) for s in range(20)] + area_fixtures()[:10]
    fixtures += [cluster_fixture(s)[0] for s in range(5)] + [classicalise(random_cheese(3, 90))[0]]
    for i, c in enumerate(fixtures):
        if io.loads(io.dumps(c)) != c:
            v.fail(f"fixture {i} does not round-trip")

    with tempfile.TemporaryDirectory() as tmp:
        t = Path(tmp)
        runs = []
        for k in ("a", "b"):
            d = t / k
            d.mkdir()
            outs = [
                _cli("generate", "random", "--seed", "7", "--disks", "80", "--overlap-bias", "0.7", "--out", str(d / "r.json")),
                _cli("generate", "ofarrell", "--epsilon", "0.015625", "--levels", "4", "--out", str(d / "o.json")),
                _cli("classicalise", str(d / "r.json"), "--out", str(d / "rc.json"), "--seed", "1"),
                _cli("classicalise", str(d / "o.json"), "--mode", "controlled", "--regions", str(d / "o.regions.json"), "--out", str(d / "oc.json")),
                _cli("render", str(d / "o.json"), "--overlay-regions", str(d / "o.regions.json"), "--out", str(d / "o.svg")),
                _cli("area", str(d / "rc.json"), "--mc-points", "200000", "--json"),
                _cli("check", str(d / "oc.json"), "--json"),
            ]
            for p in outs:
                if p.returncode != 0:
                    v.fail(f"cli {p.args[3:5]} exited {p.returncode}: {p.stderr.strip()}")
            runs.append((d, [p.stdout.replace(str(d), "<dir>") for p in outs]))
        (da, sa), (db, sb) = runs
        if sa != sb:
            v.fail("cli stdout differs between runs")
        files = sorted(p.name for p in da.iterdir())
        for name in files:
            if (da / name).read_bytes() != (db / name).read_bytes():
                v.fail(f"cli output {name} differs between runs")
        v.notes.append(f"{len(files)} cli files, {len(fixtures)} round-trips")


def criterion_7() -> Verdict:
    return _timed(Verdict("C7 determinism and round-trip"), _c7)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 8)])
def test_acceptance(criterion, capsys):
    verdict = criterion()
    with capsys.disabled():
        print("\n" + verdict.line())
    assert verdict.ok, verdict.line()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.ok for r in results) else 1)
