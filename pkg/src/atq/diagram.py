"""Almost toric base diagrams: a Delzant polygon with focus-focus nodes.

A nodal trade at a Delzant corner ``v`` with primitive edge directions
``u, w`` puts a node at ``v + t*(u + w)`` and records the straight branch
cut from ``v`` to the node. The polygon itself is left untouched, so
lattice-point bookkeeping stays on the original Delzant polygon.

Cut disjointness is enforced in the following form: no two nodes share a
position or an anchor, and no two open cuts meet transversally or overlap
along a segment. A node may sit on another node's cut (the fibre over that
point is still a single focus-focus fibre); the twelve traded corners of
the nine-fold blowup cannot be arranged on their lattice points otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    AlreadyTraded,
    CutCollision,
    InvalidDiagram,
    InvalidParameter,
    NodeExterior,
    NonDelzant,
    PerimeterMismatch,
    PrequantumIncompatible,
    UntradedVertex,
)
from .lattice import Point, Polygon, Unimodular, cross, is_primitive, primitive, rat, transform_point


@dataclass(frozen=True)
class Node:
    position: Point
    eigenline: tuple[int, int]
    multiplicity: int = 1
    cut_anchor: Point = None  # type: ignore[assignment]

    @property
    def t(self) -> Fraction:
        """Affine distance from the anchor along the eigenline."""
        d = self.position - self.cut_anchor
        p, q = self.eigenline
        return d.x / p if p else d.y / q

    def key(self):
        return (self.position, self.cut_anchor, self.eigenline, self.multiplicity)


class Violation(NamedTuple):
    kind: str
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "detail": self.detail}


@dataclass(frozen=True)
class Diagram:
    polygon: Polygon
    nodes: tuple[Node, ...] = ()
    traded_vertices: frozenset[int] = field(default_factory=frozenset)

    def canonical(self) -> "Diagram":
        """Same diagram with nodes ordered by position (the serialized order)."""
        return replace(self, nodes=tuple(sorted(self.nodes, key=Node.key)))

    @property
    def fully_traded(self) -> bool:
        return len(self.traded_vertices) == len(self.polygon)


@dataclass(frozen=True)
class ClosedBase:
    """Sphere base obtained by gluing two fully traded disks along their boundaries."""

    half_a: Diagram
    half_b: Diagram
    gluing_note: str = ""
    tag: str | None = None

    @property
    def nodes(self) -> tuple[Node, ...]:
        return self.half_a.nodes + self.half_b.nodes


def monodromy(node: Node) -> Unimodular:
    """Shear ``I + k * v (x) Jv`` fixing the eigenline ``v = (p, q)``."""
    p, q = node.eigenline
    k = node.multiplicity
    return Unimodular(1 - k * p * q, k * p * p, -k * q * q, 1 + k * p * q)


def _cuts_conflict(a1, b1, a2, b2) -> str | None:
    """Why two cut segments conflict, or None. Shared endpoints and T-touching are allowed."""
    d1, d2 = b1 - a1, b2 - a2
    if cross(d1, d2) == 0:
        if cross(d1, a2 - a1) != 0:
            return None
        # collinear: overlap of positive length along the common line
        def proj(p):
            return (p - a1)[0] * d1[0] + (p - a1)[1] * d1[1]
        lo1, hi1 = 0, proj(b1)
        lo2, hi2 = sorted((proj(a2), proj(b2)))
        if min(hi1, hi2) > max(lo1, lo2):
            return "collinear cuts overlap"
        return None
    s1, s2 = cross(d1, a2 - a1), cross(d1, b2 - a1)
    s3, s4 = cross(d2, a1 - a2), cross(d2, b1 - a2)
    if s1 * s2 < 0 and s3 * s4 < 0:
        return "cuts cross"
    return None


def _node_problems(polygon: Polygon, node: Node, i: int) -> list[Violation]:
    out = []
    if not isinstance(node.multiplicity, int) or node.multiplicity < 1:
        out.append(Violation("multiplicity", f"node {i}: multiplicity must be a positive integer"))
    if not is_primitive(node.eigenline):
        out.append(Violation("eigenline", f"node {i}: eigenline {node.eigenline} is not primitive"))
        return out
    if not polygon.contains_strictly(node.position):
        out.append(Violation("interiority", f"node {i}: position {_fmt(node.position)} is not strictly interior"))
    if node.cut_anchor not in polygon.vertices:
        out.append(Violation("anchor", f"node {i}: cut anchor {_fmt(node.cut_anchor)} is not a polygon vertex"))
    d = node.position - node.cut_anchor
    if cross(d, node.eigenline) != 0 or node.position == node.cut_anchor or node.t <= 0:
        out.append(Violation("eigenline", f"node {i}: position is not anchor + t*eigenline with t > 0"))
    return out


def _pair_problems(n1: Node, n2: Node, i: int, j: int) -> list[Violation]:
    if n1.position == n2.position:
        return [Violation("disjointness", f"nodes {i} and {j}: same position (use multiplicity)")]
    if n1.cut_anchor == n2.cut_anchor:
        return [Violation("disjointness", f"nodes {i} and {j}: shared cut anchor {_fmt(n1.cut_anchor)}")]
    why = _cuts_conflict(n1.cut_anchor, n1.position, n2.cut_anchor, n2.position)
    if why:
        return [Violation("disjointness", f"nodes {i} and {j}: {why}")]
    return []


def validate(d: Diagram) -> list[Violation]:
    poly = d.polygon
    out: list[Violation] = []
    for i, node in enumerate(d.nodes):
        out += _node_problems(poly, node, i)
    for i in range(len(d.nodes)):
        for j in range(i + 1, len(d.nodes)):
            out += _pair_problems(d.nodes[i], d.nodes[j], i, j)
    anchored = {n.cut_anchor for n in d.nodes}
    for k in sorted(d.traded_vertices):
        if not 0 <= k < len(poly):
            out.append(Violation("traded", f"traded vertex index {k} out of range"))
        elif poly.vertices[k] not in anchored:
            out.append(Violation("traded", f"traded vertex {k} carries no node"))
    for i, node in enumerate(d.nodes):
        if node.cut_anchor in poly.vertices and poly.index(node.cut_anchor) not in d.traded_vertices:
            out.append(Violation("anchor", f"node {i}: anchor vertex is not marked traded"))
    for k in range(len(poly)):
        if k not in d.traded_vertices and poly.corner_det(k) != 1:
            out.append(Violation("delzant", f"untraded vertex {k} at {_fmt(poly.vertices[k])} is not Delzant"))
    return out


def require_valid(d: Diagram) -> Diagram:
    problems = validate(d)
    if problems:
        raise InvalidDiagram("; ".join(p.detail for p in problems), problems)
    return d


def _check_new_node(d: Diagram, node: Node, skip: int | None = None):
    if not d.polygon.contains_strictly(node.position):
        raise NodeExterior(f"node position {_fmt(node.position)} is not strictly interior")
    for j, other in enumerate(d.nodes):
        if j == skip:
            continue
        problems = _pair_problems(node, other, -1, j)
        if problems:
            raise CutCollision(problems[0].detail.replace("nodes -1 and", "new node and node"))


def nodal_trade(d: Diagram, vertex: int, t, multiplicity: int = 1) -> Diagram:
    t = rat(t)
    if t <= 0:
        raise InvalidParameter("trade parameter t must be positive")
    if not isinstance(multiplicity, int) or multiplicity < 1:
        raise InvalidParameter("multiplicity must be a positive integer")
    v = d.polygon.vertex(vertex)
    if vertex in d.traded_vertices:
        raise AlreadyTraded(f"vertex {vertex} at {_fmt(v)} is already traded")
    if d.polygon.corner_det(vertex) != 1:
        raise NonDelzant(f"vertex {vertex} at {_fmt(v)} is not a Delzant corner")
    u, w = d.polygon.edge_directions(vertex)
    e = primitive((u[0] + w[0], u[1] + w[1]))
    node = Node(v + Point(t * e[0], t * e[1]), e, multiplicity, v)
    _check_new_node(d, node)
    return Diagram(d.polygon, d.nodes + (node,), d.traded_vertices | {vertex})


def nodal_slide(d: Diagram, index: int, new_t) -> Diagram:
    new_t = rat(new_t)
    if not 0 <= index < len(d.nodes):
        raise InvalidParameter(f"node index {index} out of range")
    if new_t <= 0:
        raise InvalidParameter("slide parameter must be positive")
    old = d.nodes[index]
    e = old.eigenline
    node = replace(old, position=old.cut_anchor + Point(new_t * e[0], new_t * e[1]))
    _check_new_node(d, node, skip=index)
    nodes = list(d.nodes)
    nodes[index] = node
    return replace(d, nodes=tuple(nodes))


def slide_all(d: Diagram, delta) -> Diagram:
    """Move every node by ``delta`` along its eigenline."""
    for i in range(len(d.nodes)):
        d = nodal_slide(d, i, d.nodes[i].t + rat(delta))
    return d


def transform(d: Diagram, A: Unimodular, t=(0, 0)) -> Diagram:
    """Image of the diagram under the integral affine map ``x -> A x + t``."""
    verts = [transform_point(v, A, t) for v in d.polygon.vertices]
    poly = Polygon(verts)
    traded = frozenset(poly.index(verts[k]) for k in d.traded_vertices)
    nodes = tuple(
        Node(transform_point(n.position, A, t), tuple(A.apply(n.eigenline)), n.multiplicity,
             transform_point(n.cut_anchor, A, t))
        for n in d.nodes
    )
    return Diagram(poly, nodes, traded)


def symplectic_sum(a: Diagram, b: Diagram, prequantum_compatible: bool = True,
                   tag: str | None = None, note: str = "") -> ClosedBase:
    """Glue two fully traded disks along their boundary tori.

    Equal affine perimeter stands in for the boundary tori being
    symplectomorphic. ``prequantum_compatible`` asserts that the
    pre-quantum bundles agree on the glued torus, which cannot be read off
    the diagrams.
    """
    for name, half in (("first", a), ("second", b)):
        require_valid(half)
        missing = sorted(set(range(len(half.polygon))) - half.traded_vertices)
        if missing:
            raise UntradedVertex(f"{name} half has untraded vertices {missing}")
    pa, pb = a.polygon.perimeter_affine(), b.polygon.perimeter_affine()
    if pa != pb:
        raise PerimeterMismatch(f"boundary affine perimeters differ: {pa} != {pb}")
    if not prequantum_compatible:
        raise PrequantumIncompatible("pre-quantum line bundles do not agree on the gluing torus")
    text = f"boundary sum of two disks, affine perimeter {pa}, {len(a.nodes)}+{len(b.nodes)} nodes"
    if note:
        text += f"; {note}"
    return ClosedBase(a, b, text, tag)


def _fmt(p) -> str:
    return f"({p[0]}, {p[1]})"


def total_nodes(nodes: Sequence[Node]) -> int:
    return sum(n.multiplicity for n in nodes)
