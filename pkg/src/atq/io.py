"""JSON wire format.

Rationals are strings (``"7/3"`` or ``"4"``), points are two-element
lists of such strings. Printing is canonical: nodes sorted by position,
traded vertices sorted, fixed key order, so ``dumps(loads(s)) == s`` for
anything this module printed.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .diagram import ClosedBase, Diagram, Node
from .errors import ParseError
from .graded import GradedQuant
from .lattice import Point, Polygon, rat
from .quantization import BSClass, HalfPlane, QuantReport, Region, Window
from .catalog import SemitoricModel


def q(x: Fraction) -> str:
    return str(x)


def point_json(p) -> list[str]:
    return [q(rat(p[0])), q(rat(p[1]))]


def polygon_json(poly: Polygon) -> dict:
    return {"vertices": [point_json(v) for v in poly.vertices]}


def node_json(n: Node) -> dict:
    return {
        "position": point_json(n.position),
        "eigenline": [int(n.eigenline[0]), int(n.eigenline[1])],
        "multiplicity": n.multiplicity,
        "cut_anchor": point_json(n.cut_anchor),
    }


def diagram_json(d: Diagram) -> dict:
    d = d.canonical()
    return {
        "polygon": polygon_json(d.polygon),
        "nodes": [node_json(n) for n in d.nodes],
        "traded_vertices": sorted(d.traded_vertices),
    }


def closed_json(c: ClosedBase) -> dict:
    return {
        "half_a": diagram_json(c.half_a),
        "half_b": diagram_json(c.half_b),
        "gluing_note": c.gluing_note,
        "tag": c.tag,
    }


def semitoric_json(m: SemitoricModel) -> dict:
    w = m.window
    return {
        "region": {"halfplanes": [[q(h.a), q(h.b), q(h.c)] for h in m.region.halfplanes]},
        "nodes": [node_json(n) for n in sorted(m.nodes, key=Node.key)],
        "window": [q(w.x0), q(w.y0), q(w.x1), q(w.y1)],
    }


def report_json(r: QuantReport) -> dict:
    entries = []
    for entry in r.classification:
        p, cls = entry[0], entry[1]
        entries.append([[str(p[0]), str(p[1])], str(cls), *entry[2:]])
    return {
        "classification": entries,
        "graded": r.total.to_json(),
        "symplectic_volume": q(r.symplectic_volume),
        "kaehler_dimension": r.kaehler_dimension,
        "truncated": r.truncated,
    }


def to_json(obj) -> dict:
    if isinstance(obj, Diagram):
        return diagram_json(obj)
    if isinstance(obj, ClosedBase):
        return closed_json(obj)
    if isinstance(obj, SemitoricModel):
        return semitoric_json(obj)
    if isinstance(obj, QuantReport):
        return report_json(obj)
    if isinstance(obj, GradedQuant):
        return {"graded": obj.to_json()}
    if isinstance(obj, Polygon):
        return polygon_json(obj)
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=2) + "\n"


# --- parsing ----------------------------------------------------------------


def _rat(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"expected a rational string, got {x!r}")
    try:
        return rat(x)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {x!r}") from None


def _point(x) -> Point:
    if not isinstance(x, list) or len(x) != 2:
        raise ParseError(f"expected a point [x, y], got {x!r}")
    return Point(_rat(x[0]), _rat(x[1]))


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def parse_polygon(obj) -> Polygon:
    try:
        return Polygon([_point(v) for v in obj["vertices"]])
    except (KeyError, TypeError):
        raise ParseError("polygon needs a 'vertices' list") from None


def parse_node(obj) -> Node:
    try:
        p, q_ = obj["eigenline"]
        return Node(_point(obj["position"]), (_int(p, "eigenline"), _int(q_, "eigenline")),
                    _int(obj.get("multiplicity", 1), "multiplicity"), _point(obj["cut_anchor"]))
    except (KeyError, TypeError, ValueError):
        raise ParseError(f"malformed node {obj!r}") from None


def parse_diagram(obj) -> Diagram:
    try:
        return Diagram(parse_polygon(obj["polygon"]), tuple(parse_node(n) for n in obj.get("nodes", [])),
                       frozenset(_int(k, "traded vertex") for k in obj.get("traded_vertices", [])))
    except (KeyError, TypeError, AttributeError):
        raise ParseError("diagram needs 'polygon', 'nodes' and 'traded_vertices'") from None


def parse_closed(obj) -> ClosedBase:
    return ClosedBase(parse_diagram(obj["half_a"]), parse_diagram(obj["half_b"]),
                      str(obj.get("gluing_note", "")), obj.get("tag"))


def parse_semitoric(obj) -> SemitoricModel:
    try:
        hs = tuple(HalfPlane.of(*(_rat(c) for c in h)) for h in obj["region"]["halfplanes"])
        return SemitoricModel(Region(hs), tuple(parse_node(n) for n in obj.get("nodes", [])),
                              Window.of(*(_rat(c) for c in obj["window"])))
    except (KeyError, TypeError, ValueError):
        raise ParseError("semitoric input needs 'region.halfplanes', 'nodes' and 'window'") from None


def parse_report(obj) -> QuantReport:
    entries = []
    for e in obj["classification"]:
        p = (int(e[0][0]), int(e[0][1]))
        entries.append((p, BSClass.parse(e[1]), *e[2:]))
    return QuantReport(tuple(entries), GradedQuant.from_json(obj["graded"]),
                       Fraction(obj["symplectic_volume"]), obj["kaehler_dimension"], obj["truncated"])


def from_json(obj: Any):
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON must be an object")
    if "half_a" in obj:
        return parse_closed(obj)
    if "region" in obj:
        return parse_semitoric(obj)
    if "polygon" in obj:
        return parse_diagram(obj)
    if "classification" in obj:
        return parse_report(obj)
    if "graded" in obj:
        return GradedQuant.from_json(obj["graded"])
    if "vertices" in obj:
        return parse_polygon(obj)
    raise ParseError(f"unrecognised document with keys {sorted(obj)}")


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return from_json(obj)


# JSON Schema of the quantize output
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["classification", "graded", "symplectic_volume", "kaehler_dimension", "truncated"],
    "additionalProperties": False,
    "properties": {
        "classification": {
            "type": "array",
            "items": {
                "type": "array",
                "minItems": 2,
                "maxItems": 3,
                "prefixItems": [
                    {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+$"},
                     "minItems": 2, "maxItems": 2},
                    {"type": "string", "pattern": r"^(RegularBS|EllipticBoundary|NotBS|FocusFocusBS\(\d+\))$"},
                    {"enum": ["a", "b"]},
                ],
            },
        },
        "graded": {
            "type": "object",
            "patternProperties": {
                r"^\d+$": {"type": "array", "items": {"type": "integer", "minimum": 0},
                           "minItems": 2, "maxItems": 2},
            },
            "required": ["0", "1", "2"],
            "additionalProperties": False,
        },
        "symplectic_volume": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
        "kaehler_dimension": {"type": ["integer", "null"]},
        "truncated": {"type": "boolean"},
    },
}
