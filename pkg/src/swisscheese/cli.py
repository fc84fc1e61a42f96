"""Command-line interface.

Exit codes: 0 success (``check``: classical), 1 not classical or a failed
self-test, 2 unreadable or malformed input, 3 a violated precondition (the
condition is printed), 4 an internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import cheese as ch
from . import io
from .classicalise import annular_classicalise, classicalise, controlled_classicalise, error_set
from .construct import (
    OFarrellParams,
    hallstrom_tail,
    level_budget,
    level_radii,
    ofarrell_layout,
    random_annular_cheese,
    random_cheese,
    synthetic_annular,
)
from .errors import InvariantViolation, PreconditionError
from .oracle import SampleConfig, mc_area
from .svg import render_svg

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 1, 2, 3, 4


def _stats_dict(c: ch.Cheese) -> dict:
    s = ch.stats(c)
    es = error_set(c)
    return {
        "delta1": s.delta1,
        "delta2": s.delta2,
        "rho": s.rho,
        "mu": s.mu,
        "annular_rho": s.annular_rho,
        "annular_delta": s.annular_delta,
        "significant_count": s.significant_count,
        "classical": s.classical,
        "semiclassical": s.semiclassical,
        "tail_budget": c.tail_budget,
        "error_set": {
            "pair_violations": [list(p) for p in es.pair_violations],
            "boundary_violations": list(es.boundary_violations),
        },
    }


def _print_report(d: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(d, indent=2, ensure_ascii=False))
        return
    for k, v in d.items():
        if isinstance(v, dict):
            print(f"{k}:")
            for k2, v2 in v.items():
                print(f"  {k2}: {_short(v2)}")
        else:
            print(f"{k}: {_short(v)}")


def _short(v) -> str:
    if isinstance(v, list) and len(v) > 8:
        return f"{v[:8]} ... ({len(v)} total)"
    return str(v)


def _area_dict(c: ch.Cheese, n: int, seed: int) -> dict:
    est = mc_area(c, SampleConfig(n_points=n, seed=seed))
    formula = ch.area_formula(c)
    sigma = abs(formula - est.value) / est.std_error if est.std_error > 0 else (0.0 if formula == est.value else math.inf)
    return {
        "area_formula": formula,
        "mc_area": est.value,
        "std_error": est.std_error,
        "n_points": est.n_points,
        "seed": seed,
        "discrepancy_sigma": sigma,
        "formula_applies": ch.is_semiclassical(c) and c.tail_budget == 0,
    }


# -- subcommands -----------------------------------------------------------------------------


def cmd_check(args) -> int:
    c = io.load_cheese(args.input)
    d = _stats_dict(c)
    _print_report(d, args.json)
    return EXIT_OK if d["classical"] else EXIT_FAIL


def cmd_stats(args) -> int:
    c = io.load_cheese(args.input)
    d = _stats_dict(c)
    if args.mc_points:
        d["area"] = _area_dict(c, args.mc_points, args.seed)
    _print_report(d, args.json)
    return EXIT_OK


def cmd_area(args) -> int:
    c = io.load_cheese(args.input)
    d = _area_dict(c, args.mc_points, args.seed)
    _print_report(d, args.json)
    if d["formula_applies"] and d["discrepancy_sigma"] > 4:
        return EXIT_FAIL
    return EXIT_OK


def cmd_classicalise(args) -> int:
    c = io.load_cheese(args.input)
    rng = np.random.default_rng(args.seed) if args.seed is not None else None
    if args.mode == "plain":
        out, report = classicalise(c, rng=rng)
    elif args.mode == "annular":
        out, report = annular_classicalise(c, rng=rng)
    else:
        if not args.regions:
            print("error: --mode controlled needs --regions", file=sys.stderr)
            return EXIT_PARSE
        cc = io.load_regions(args.regions)
        out, report = controlled_classicalise(c, cc, rng=rng)
    out_path = Path(args.out)
    io.save_cheese(out, out_path)
    rep = report.to_dict()
    io.write_json(rep, out_path.with_suffix(".report.json"))
    summary = {
        "mode": rep["mode"],
        "steps": len(rep["steps"]),
        "delta1_before": rep["delta1_before"],
        "delta1_after": rep["delta1_after"],
        "delta2_before": rep["delta2_before"],
        "delta2_after": rep["delta2_after"],
    }
    if args.mode == "annular":
        summary["annular_delta_before"] = rep["annular_delta_before"]
        summary["annular_delta_after"] = rep["annular_delta_after"]
        summary["bounds"] = rep["bounds"]
    if args.mode == "controlled":
        summary["preserved"] = len(rep["preserved_map"])
    summary["output"] = str(out_path)
    _print_report(summary, args.json)
    return EXIT_OK


def _layout_dict(layout) -> dict:
    p = layout.params
    levels = []
    for m in range(1, p.levels + 1):
        r0, r1 = level_radii(m)
        k = layout.k_bands[m - 1]
        e = layout.e_bands[m - 1]
        levels.append(
            {
                "m": m,
                "gamma": layout.gamma[m - 1],
                "budget": level_budget(m, p.epsilon),
                "r0": r0,
                "r1": r1,
                "annular_rho": ch.annular_rho(layout.levels[m - 1]),
                "K": [k.inner_radius, k.outer_radius],
                "M": layout.margins[m - 1],
                "E": [e.inner_radius, e.outer_radius],
            }
        )
    return {
        "format": "swisscheese-layout/1",
        "epsilon": p.epsilon,
        "levels": p.levels,
        "disks_per_level": p.disks_per_level,
        "seed": p.seed,
        "tail_budget": layout.merged.tail_budget,
        "hallstrom_tail": hallstrom_tail(p.levels, p.epsilon),
        "table": levels,
    }


def cmd_generate(args) -> int:
    out = Path(args.out)
    if args.kind == "random":
        c = random_cheese(args.seed, args.disks, args.overlap_bias)
        meta = {"generator": "random", "seed": args.seed, "disks": args.disks, "overlap_bias": args.overlap_bias}
    elif args.kind == "annular":
        if args.budget is None:
            c = random_annular_cheese(args.seed, args.disks, args.overlap_bias)
            meta = {"generator": "random_annular", "seed": args.seed, "disks": args.disks}
        else:
            c = synthetic_annular((0.0, 0.0), args.r0, args.r1, args.budget, args.disks, args.seed)
            meta = {
                "generator": "synthetic_annular",
                "seed": args.seed,
                "disks": args.disks,
                "r0": args.r0,
                "r1": args.r1,
                "budget": args.budget,
            }
    else:
        params = OFarrellParams(args.epsilon, args.levels, args.disks_per_level, args.seed)
        layout = ofarrell_layout(params)
        c = layout.merged
        meta = {"generator": "ofarrell", "epsilon": args.epsilon, "levels": args.levels, "seed": args.seed}
        io.save_regions(layout.controlling, out.with_suffix(".regions.json"))
        io.write_json(_layout_dict(layout), out.with_suffix(".layout.json"))
    io.save_cheese(c, out, meta)
    print(f"wrote {out}")
    return EXIT_OK


def cmd_render(args) -> int:
    c = io.load_cheese(args.input)
    overlays = []
    if args.overlay_regions:
        cc = io.load_regions(args.overlay_regions)
        overlays = [(p.k_region, p.margin) for p in cc.pairs]
    Path(args.out).write_text(render_svg(c, overlays, size=args.size), encoding="utf-8")
    print(f"wrote {args.out}")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="swisscheese", description="Abstract Swiss cheese toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="functionals, classicality, error set; exit 0 iff classical")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("stats", help="functionals, optionally with a Monte-Carlo area")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.add_argument("--mc-points", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("area", help="pi*delta_2 against a Monte-Carlo estimate; exit 1 beyond 4 sigma")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.add_argument("--mc-points", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("classicalise", help="rewrite into a classical cheese")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.add_argument("--mode", choices=["plain", "annular", "controlled"], default="plain")
    p.add_argument("--regions", help="regions document (controlled mode)")
    p.add_argument("--seed", type=int, default=None, help="randomise the violation order")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classicalise)

    p = sub.add_parser("generate", help="write a generated cheese")
    p.add_argument("kind", choices=["random", "annular", "ofarrell"])
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--disks", type=int, default=20)
    p.add_argument("--overlap-bias", type=float, default=0.3)
    p.add_argument("--r0", type=float, default=1.0)
    p.add_argument("--r1", type=float, default=0.5)
    p.add_argument("--budget", type=float, default=None, help="annular: ring-packed classical cheese")
    p.add_argument("--epsilon", type=float, default=2.0**-6)
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--disks-per-level", type=int, default=6)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("render", help="write an SVG picture")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.add_argument("--overlay-regions", help="regions document to outline")
    p.add_argument("--size", type=int, default=512)
    p.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except io.DocumentError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as e:
        cond = f" [{e.condition}]" if e.condition else ""
        print(f"precondition failed{cond}: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantViolation as e:
        print(f"internal invariant failed: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
