"""Deterministic SVG pictures of cheeses.

The outer disk is filled; the hole (if any) is cut out with the even-odd
rule, and deleted disks are painted white on top. The y axis points up,
so stored coordinates are flipped. Numbers are printed with ``%.10g``,
which keeps output byte-stable.
"""

from __future__ import annotations

from .cheese import Cheese
from .regions import Band, Region, bands

__all__ = ["render_svg"]

FILL = "#f2c14e"
CUT = "#ffffff"
K_STROKE = "#1f5fbf"
U_STROKE = "#7f7f7f"
MARGIN = 0.05


def _f(x: float) -> str:
    s = "%.10g" % x
    return "0" if s == "-0" else s


def _circle_path(cx: float, cy: float, r: float) -> str:
    # two half-arcs; SVG cannot draw a full circle with a single arc command
    return (
        f"M {_f(cx - r)} {_f(cy)} A {_f(r)} {_f(r)} 0 1 0 {_f(cx + r)} {_f(cy)} "
        f"A {_f(r)} {_f(r)} 0 1 0 {_f(cx - r)} {_f(cy)} Z"
    )


def _ring_outline(b: Band, stroke: str, width: float, dash: bool) -> list[str]:
    out = []
    extra = f' stroke-dasharray="{_f(4 * width)} {_f(3 * width)}"' if dash else ""
    for r in (b.lo, b.hi):
        if r > 0:
            out.append(
                f'<circle cx="{_f(b.center.x)}" cy="{_f(-b.center.y)}" r="{_f(r)}" '
                f'fill="none" stroke="{stroke}" stroke-width="{_f(width)}"{extra}/>'
            )
    return out


def render_svg(
    c: Cheese,
    overlays: list[tuple[Region, float | None]] | None = None,
    size: int = 512,
) -> str:
    """SVG text for ``c``.

    ``overlays`` is a list of ``(K, margin)``: each ``K`` is drawn as solid
    outlined rings and, if ``margin`` is given, its dilation as dashed rings.
    """
    o = c.outer
    half = o.radius * (1 + MARGIN)
    x0, y0 = o.center.x - half, -o.center.y - half
    w = 2 * half
    stroke = o.radius / 400
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_f(x0)} {_f(y0)} {_f(w)} {_f(w)}">',
    ]
    cx, cy = o.center.x, -o.center.y
    if c.hole is None:
        lines.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(o.radius)}" fill="{FILL}"/>')
    else:
        d = _circle_path(cx, cy, o.radius) + " " + _circle_path(cx, cy, c.hole.radius)
        lines.append(f'<path fill="{FILL}" fill-rule="evenodd" d="{d}"/>')
    for disk in c.inner:
        if disk.radius > 0:
            lines.append(
                f'<circle cx="{_f(disk.center.x)}" cy="{_f(-disk.center.y)}" '
                f'r="{_f(disk.radius)}" fill="{CUT}"/>'
            )
    for k_region, m in overlays or []:
        for b in bands(k_region):
            lines += _ring_outline(b, K_STROKE, stroke, dash=False)
            if m is not None:
                lines += _ring_outline(Band(b.center, b.lo - m, b.hi + m, True), U_STROKE, stroke, dash=True)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
