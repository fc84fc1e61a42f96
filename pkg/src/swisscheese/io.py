"""JSON documents for cheeses and controlling regions.

Cheese document (``"format": "swisscheese/1"``)::

    {"format": "swisscheese/1",
     "outer": {"cx": 0.0, "cy": 0.0, "r": 1.0},
     "hole": {"cx": 0.0, "cy": 0.0, "r": 0.5},        # optional
     "disks": [{"cx": 0.1, "cy": 0.7, "r": 0.05}, ...],
     "tail_budget": 0.0,                               # optional
     "metadata": {...}}                                # optional, free-form

Regions document (``"format": "swisscheese-regions/1"``)::

    {"format": "swisscheese-regions/1",
     "pairs": [{"region": {"type": "annulus", "cx": 0, "cy": 0,
                           "r_inner": 0.9, "r_outer": 1.1},
                "margin": 0.01},
               {"region": {"type": "disk", "cx": 0, "cy": 0, "r": 0.2},
                "margin": 0.05}]}

Floats are written with Python's shortest round-trip repr, so
``loads(dumps(c)) == c`` holds exactly.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

from .cheese import Cheese
from .classicalise import ControllingCollection, ControllingPair
from .errors import SwissCheeseError
from .geometry import Annulus, Disk

__all__ = [
    "CHEESE_FORMAT",
    "REGIONS_FORMAT",
    "DocumentError",
    "cheese_to_dict",
    "cheese_from_dict",
    "dumps",
    "loads",
    "load_cheese",
    "save_cheese",
    "regions_to_dict",
    "regions_from_dict",
    "load_regions",
    "save_regions",
    "write_json",
]

CHEESE_FORMAT = "swisscheese/1"
REGIONS_FORMAT = "swisscheese-regions/1"


class DocumentError(SwissCheeseError, ValueError):
    """Malformed document. ``field`` is a JSON path like ``disks[3].r``; ``line`` is 1-based."""

    def __init__(self, message: str, field: str = "", line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.field = field
        self.line = line


def _number(obj: dict, key: str, path: str) -> float:
    if key not in obj:
        raise DocumentError("missing number", f"{path}.{key}")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise DocumentError(f"expected a number, got {type(v).__name__}", f"{path}.{key}")
    v = float(v)
    if not math.isfinite(v):
        raise DocumentError("number must be finite", f"{path}.{key}")
    return v


def _object(v: Any, path: str) -> dict:
    if not isinstance(v, dict):
        raise DocumentError(f"expected an object, got {type(v).__name__}", path)
    return v


def _disk(obj: Any, path: str) -> Disk:
    obj = _object(obj, path)
    try:
        return Disk((_number(obj, "cx", path), _number(obj, "cy", path)), _number(obj, "r", path))
    except ValueError as e:
        if isinstance(e, DocumentError):
            raise
        raise DocumentError(str(e), path) from None


def _disk_dict(d: Disk) -> dict:
    return {"cx": d.center.x, "cy": d.center.y, "r": d.radius}


def _parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, line=e.lineno) from None


def _check_format(doc: dict, want: str) -> None:
    got = doc.get("format")
    if got != want:
        raise DocumentError(f"expected format {want!r}, got {got!r}", "format")


# -- cheeses ---------------------------------------------------------------------------


def cheese_to_dict(c: Cheese, metadata: dict | None = None) -> dict:
    doc: dict = {"format": CHEESE_FORMAT, "outer": _disk_dict(c.outer)}
    if c.hole is not None:
        doc["hole"] = _disk_dict(c.hole)
    doc["disks"] = [_disk_dict(d) for d in c.inner]
    doc["tail_budget"] = c.tail_budget
    if metadata:
        doc["metadata"] = metadata
    return doc


def cheese_from_dict(doc: Any) -> Cheese:
    doc = _object(doc, "$")
    _check_format(doc, CHEESE_FORMAT)
    outer = _disk(doc.get("outer"), "outer")
    hole = _disk(doc["hole"], "hole") if doc.get("hole") is not None else None
    disks = doc.get("disks", [])
    if not isinstance(disks, list):
        raise DocumentError("expected a list", "disks")
    inner = tuple(_disk(d, f"disks[{k}]") for k, d in enumerate(disks))
    tail = _number(doc, "tail_budget", "$") if "tail_budget" in doc else 0.0
    if "metadata" in doc and not isinstance(doc["metadata"], dict):
        raise DocumentError("expected an object", "metadata")
    try:
        return Cheese(outer, inner, hole, tail)
    except ValueError as e:
        raise DocumentError(str(e), "hole" if "hole" in str(e) else "$") from None


def dumps(c: Cheese, metadata: dict | None = None) -> str:
    return json.dumps(cheese_to_dict(c, metadata), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Cheese:
    return cheese_from_dict(_parse_json(text))


def load_cheese(path: str | Path) -> Cheese:
    return loads(Path(path).read_text(encoding="utf-8"))


def save_cheese(c: Cheese, path: str | Path, metadata: dict | None = None) -> None:
    Path(path).write_text(dumps(c, metadata), encoding="utf-8")


def write_json(obj: Any, path: str | Path) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


# -- regions ------------------------------------------------------------------------------


def _region_dict(r) -> dict:
    if isinstance(r, Disk):
        return {"type": "disk", **_disk_dict(r)}
    if isinstance(r, Annulus):
        return {
            "type": "annulus",
            "cx": r.center.x,
            "cy": r.center.y,
            "r_inner": r.inner_radius,
            "r_outer": r.outer_radius,
        }
    raise TypeError(f"only disk and annulus regions serialise, got {type(r).__name__}")


def _region(obj: Any, path: str):
    obj = _object(obj, path)
    kind = obj.get("type")
    if kind == "disk":
        return _disk(obj, path)
    if kind == "annulus":
        try:
            return Annulus(
                (_number(obj, "cx", path), _number(obj, "cy", path)),
                _number(obj, "r_inner", path),
                _number(obj, "r_outer", path),
            )
        except ValueError as e:
            if isinstance(e, DocumentError):
                raise
            raise DocumentError(str(e), path) from None
    raise DocumentError(f"unknown region type {kind!r}", f"{path}.type")


def regions_to_dict(cc: ControllingCollection) -> dict:
    return {
        "format": REGIONS_FORMAT,
        "pairs": [{"region": _region_dict(p.k_region), "margin": p.margin} for p in cc.pairs],
    }


def regions_from_dict(doc: Any) -> ControllingCollection:
    doc = _object(doc, "$")
    _check_format(doc, REGIONS_FORMAT)
    pairs = doc.get("pairs")
    if not isinstance(pairs, list) or not pairs:
        raise DocumentError("expected a non-empty list", "pairs")
    out = []
    for k, p in enumerate(pairs):
        path = f"pairs[{k}]"
        p = _object(p, path)
        region = _region(p.get("region"), f"{path}.region")
        m = _number(p, "margin", path)
        if not m > 0:
            raise DocumentError("margin must be positive", f"{path}.margin")
        out.append(ControllingPair(region, m))
    return ControllingCollection(tuple(out))


def load_regions(path: str | Path) -> ControllingCollection:
    return regions_from_dict(_parse_json(Path(path).read_text(encoding="utf-8")))


def save_regions(cc: ControllingCollection, path: str | Path) -> None:
    write_json(regions_to_dict(cc), path)
