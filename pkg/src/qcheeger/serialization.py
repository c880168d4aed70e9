"""Versioned JSON documents for shapes and interval sets.

Numbers are written as decimal strings (``repr`` of the double, which
round-trips exactly) and infinite endpoints as ``"-inf"``/``"inf"``. Readers
also accept plain JSON numbers.

Example documents::

    {"schema_version": 1, "kind": "disc", "radius": "1.0", "center": ["0.0", "0.0"]}
    {"schema_version": 1, "kind": "flower", "j": 5, "eps": "0.1"}
    {"schema_version": 1, "kind": "intervals", "intervals": [["-inf", "-1.0"], ["4.0", "inf"]]}
"""

from __future__ import annotations

import json
import math

from .gauss1d import IntervalSet, omega_T
from .shapes2d import Annulus, ConvexPolygon, Disc, ShapeUnion, StarShape, annulus_family, flower

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """Malformed or unsupported input document."""


def _num(x) -> str:
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(x)


def _parse_num(x, allow_inf: bool = False) -> float:
    if isinstance(x, bool) or not isinstance(x, (str, int, float)):
        raise SchemaError(f"expected a number, got {x!r}")
    try:
        value = float(x)
    except ValueError as exc:
        raise SchemaError(f"not a number: {x!r}") from exc
    if math.isnan(value) or (math.isinf(value) and not allow_inf):
        raise SchemaError(f"non-finite value {x!r}")
    return value


def _point(p) -> tuple[float, float]:
    if not isinstance(p, (list, tuple)) or len(p) != 2:
        raise SchemaError(f"expected a 2-point, got {p!r}")
    return _parse_num(p[0]), _parse_num(p[1])


def shape_to_dict(shape) -> dict:
    if isinstance(shape, Disc):
        body = {"kind": "disc", "radius": _num(shape.radius), "center": [_num(c) for c in shape.center]}
    elif isinstance(shape, Annulus):
        body = {"kind": "annulus", "inner": _num(shape.inner), "outer": _num(shape.outer),
                "center": [_num(c) for c in shape.center]}
    elif isinstance(shape, ConvexPolygon):
        body = {"kind": "polygon", "vertices": [[_num(x), _num(y)] for x, y in shape.vertices]}
    elif isinstance(shape, StarShape):
        body = {"kind": "star", "scale": _num(shape.scale), "center": [_num(c) for c in shape.center],
                "harmonics": [[int(k), _num(a), _num(b)] for k, a, b in shape.harmonics]}
    elif isinstance(shape, ShapeUnion):
        body = {"kind": "union", "components": [shape_to_dict(c) for c in shape.components]}
    elif isinstance(shape, IntervalSet):
        body = {"kind": "intervals", "intervals": shape.to_json()}
    else:
        raise TypeError(f"cannot serialize {type(shape).__name__}")
    return {"schema_version": SCHEMA_VERSION, **body}


def shape_from_dict(doc: dict):
    """Build a shape or interval set; raises :class:`SchemaError` on bad input."""
    if not isinstance(doc, dict):
        raise SchemaError("a shape document must be a JSON object")
    version = doc.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r}")
    kind = doc.get("kind")
    try:
        if kind == "disc":
            return Disc(_parse_num(doc["radius"]), _point(doc.get("center", (0, 0))))
        if kind == "annulus":
            return Annulus(_parse_num(doc["inner"]), _parse_num(doc["outer"]), _point(doc.get("center", (0, 0))))
        if kind == "polygon":
            return ConvexPolygon([_point(p) for p in doc["vertices"]])
        if kind == "star":
            harm = tuple((int(k), _parse_num(a), _parse_num(b)) for k, a, b in doc.get("harmonics", []))
            return StarShape(_parse_num(doc["scale"]), harm, _point(doc.get("center", (0, 0))))
        if kind == "union":
            return ShapeUnion(tuple(shape_from_dict({"schema_version": version, **c}) for c in doc["components"]))
        if kind == "flower":
            return flower(int(doc["j"]), _parse_num(doc.get("eps", 0.1)))
        if kind == "annulus_family":
            return annulus_family(int(doc["j"]))[0]
        if kind == "intervals":
            return IntervalSet(tuple((_parse_num(a, True), _parse_num(b, True)) for a, b in doc["intervals"]))
        if kind == "omega_T":
            return omega_T(_parse_num(doc["T"]))
    except KeyError as exc:
        raise SchemaError(f"{kind} document lacks field {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"invalid {kind} document: {exc}") from exc
    raise SchemaError(f"unknown shape kind {kind!r}")


def dumps(shape) -> str:
    return json.dumps(shape_to_dict(shape), indent=2) + "\n"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return shape_from_dict(doc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
