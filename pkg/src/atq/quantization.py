"""Bohr-Sommerfeld classification and global real quantization of bases.

With the pre-quantum bundle normalized so that Bohr-Sommerfeld fibres sit
over integer points, an almost toric base contributes

* one copy of C for each interior lattice point over a regular fibre,
* ``n(p)`` copies of C^oo(R; C) for each lattice point over a focus-focus
  fibre with ``n(p)`` nodes,
* nothing for lattice points on the boundary (elliptic fibres).

Everything is placed in degree 2. The focus-focus part is not hard-coded:
it is the local model computed by :mod:`atq.mv` for a compact fibre.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .diagram import ClosedBase, Diagram, Node, require_valid
from .errors import EmptyWindow, InvalidDiagram, NotApplicable
from .graded import GradedQuant
from .lattice import Point, Polygon, area, cross, lattice_points, rat
from .mv import FFCovering, local_ff_quantization

TOP_DEGREE = 2


@dataclass(frozen=True)
class BSClass:
    kind: str
    node_count: int = 0

    REGULAR = "RegularBS"
    ELLIPTIC = "EllipticBoundary"
    FOCUS_FOCUS = "FocusFocusBS"
    NOT_BS = "NotBS"

    def __str__(self):
        if self.kind == self.FOCUS_FOCUS:
            return f"{self.kind}({self.node_count})"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "BSClass":
        if text.startswith(cls.FOCUS_FOCUS + "("):
            return focus_focus(int(text[len(cls.FOCUS_FOCUS) + 1:-1]))
        if text in (cls.REGULAR, cls.ELLIPTIC, cls.NOT_BS):
            return cls(text)
        raise ValueError(f"unknown fibre class {text!r}")


REGULAR_BS = BSClass(BSClass.REGULAR)
ELLIPTIC_BOUNDARY = BSClass(BSClass.ELLIPTIC)
NOT_BS = BSClass(BSClass.NOT_BS)


def focus_focus(n: int) -> BSClass:
    return BSClass(BSClass.FOCUS_FOCUS, n)


@dataclass(frozen=True)
class QuantReport:
    classification: tuple = ()
    total: GradedQuant = field(default_factory=GradedQuant)
    symplectic_volume: Fraction = Fraction(0)
    kaehler_dimension: int | None = None
    truncated: bool = False


def _classify(interior: Iterable, boundary: Iterable, nodes: Sequence[Node]) -> dict:
    at = {}
    for n in nodes:
        if n.position.is_integral:
            key = (int(n.position.x), int(n.position.y))
            at[key] = at.get(key, 0) + n.multiplicity
    out = {}
    for p in interior:
        out[p] = focus_focus(at[p]) if p in at else REGULAR_BS
    for p in boundary:
        if p in at:
            raise InvalidDiagram(f"node on boundary lattice point {p}")
        out[p] = ELLIPTIC_BOUNDARY
    return dict(sorted(out.items()))


def classify_fibers(d: Diagram) -> dict[tuple[int, int], BSClass]:
    require_valid(d)
    interior, boundary = lattice_points(d.polygon)
    return _classify(interior, boundary, d.nodes)


def quantization_from_classes(classes: Iterable[BSClass]) -> GradedQuant:
    total = GradedQuant()
    for c in classes:
        if c.kind == BSClass.REGULAR:
            total = total + GradedQuant.of({TOP_DEGREE: (1, 0)})
        elif c.kind == BSClass.FOCUS_FOCUS:
            total = total + local_ff_quantization(FFCovering(c.node_count, compact=True, bs=True))
    return total


def quantize(d: Diagram) -> GradedQuant:
    return quantization_from_classes(classify_fibers(d).values())


def quantize_closed(c: ClosedBase) -> GradedQuant:
    return quantize(c.half_a) + quantize(c.half_b)


def symplectic_volume(d: Diagram | ClosedBase) -> Fraction:
    """Symplectic volume in units of (2 pi)^2: twice the polygon area, additive over a sum."""
    if isinstance(d, ClosedBase):
        return symplectic_volume(d.half_a) + symplectic_volume(d.half_b)
    return 2 * area(d.polygon)


def kaehler_dimension_k3(c: ClosedBase) -> int:
    """Dimension c_1(L)^2 / 2 + 2 of the holomorphic sections on a K3."""
    if not isinstance(c, ClosedBase) or (c.tag or "").upper() != "K3":
        raise NotApplicable("the Kaehler dimension formula applies to K3-tagged bases only")
    value = symplectic_volume(c) / 2 + 2
    if value.denominator != 1:
        raise NotApplicable(f"c_1(L)^2 = {symplectic_volume(c)} is not even")
    return int(value)


def report(d: Diagram) -> QuantReport:
    classes = classify_fibers(d)
    return QuantReport(tuple(classes.items()), quantization_from_classes(classes.values()),
                       symplectic_volume(d))


def report_closed(c: ClosedBase) -> QuantReport:
    entries = []
    for half, d in (("a", c.half_a), ("b", c.half_b)):
        entries += [(p, cls, half) for p, cls in classify_fibers(d).items()]
    kd = None
    if (c.tag or "").upper() == "K3":
        kd = kaehler_dimension_k3(c)
    return QuantReport(tuple(entries), quantize_closed(c), symplectic_volume(c), kd)


# --- semitoric bases -------------------------------------------------------


@dataclass(frozen=True)
class HalfPlane:
    """``a*x + b*y <= c``."""

    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def of(cls, a, b, c) -> "HalfPlane":
        a, b = rat(a), rat(b)
        if a == 0 and b == 0:
            raise ValueError("degenerate half-plane")
        return cls(a, b, rat(c))

    def slack(self, p) -> Fraction:
        return self.c - self.a * p[0] - self.b * p[1]


@dataclass(frozen=True)
class Region:
    """Convex, possibly unbounded base region given by closed half-planes."""

    halfplanes: tuple[HalfPlane, ...]

    @classmethod
    def from_polygon(cls, poly: Polygon) -> "Region":
        # inside of a ccw edge a->b: cross(b - a, p - a) >= 0
        hs = []
        for a, b in poly.edges():
            dx, dy = b.x - a.x, b.y - a.y
            hs.append(HalfPlane(dy, -dx, dy * a.x - dx * a.y))
        return cls(tuple(hs))

    def side(self, p) -> int:
        worst = 1
        for h in self.halfplanes:
            s = h.slack(p)
            if s < 0:
                return -1
            if s == 0:
                worst = 0
        return worst


@dataclass(frozen=True)
class Window:
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction

    @classmethod
    def of(cls, x0, y0, x1, y1) -> "Window":
        w = cls(rat(x0), rat(y0), rat(x1), rat(y1))
        if w.x0 >= w.x1 or w.y0 >= w.y1:
            raise EmptyWindow(f"window {x0},{y0},{x1},{y1} is empty")
        return w

    def halfplanes(self, margin=0) -> tuple[HalfPlane, ...]:
        return (
            HalfPlane.of(-1, 0, -(self.x0 - margin)), HalfPlane.of(1, 0, self.x1 + margin),
            HalfPlane.of(0, -1, -(self.y0 - margin)), HalfPlane.of(0, 1, self.y1 + margin),
        )

    def contains(self, p) -> bool:
        return self.x0 <= p[0] <= self.x1 and self.y0 <= p[1] <= self.y1


def _line_meet(h: HalfPlane, g: HalfPlane):
    det = h.a * g.b - h.b * g.a
    if det == 0:
        return None
    return Point((h.c * g.b - h.b * g.c) / det, (h.a * g.c - h.c * g.a) / det)


def _feasible(hs: Sequence[HalfPlane]) -> bool:
    """Exact nonemptiness of an intersection of closed half-planes.

    A nonempty 2-D polyhedron either has a vertex (an intersection of two
    boundary lines) or contains a line; in the latter case the foot of the
    tightest parallel constraint line is feasible.
    """
    if not hs:
        return True
    candidates = [_line_meet(h, g) for h, g in combinations(hs, 2)]
    for h in hs:
        n2 = h.a * h.a + h.b * h.b
        candidates.append(Point(h.a * h.c / n2, h.b * h.c / n2))
    return any(p is not None and all(h.slack(p) >= 0 for h in hs) for p in candidates)


def _bounded_vertices(hs: Sequence[HalfPlane]) -> list[Point]:
    pts = {_line_meet(h, g) for h, g in combinations(hs, 2)}
    return [p for p in pts if p is not None and all(h.slack(p) >= 0 for h in hs)]


def _hull_area(points: Sequence[Point]) -> Fraction:
    pts = sorted(set(points))
    if len(pts) < 3:
        return Fraction(0)

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-1] - out[-2], p - out[-2]) <= 0:
                out.pop()
            out.append(p)
        return out[:-1]

    hull = half(pts) + half(reversed(pts))
    return abs(sum((cross(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))), Fraction(0))) / 2


def quantize_semitoric(region: Region | Polygon, nodes: Sequence[Node], window: Window) -> QuantReport:
    """Quantization restricted to a finite window of a possibly unbounded base.

    ``truncated`` is set when the region has points outside the window, in
    which case the counts are those of the window only.
    """
    if isinstance(region, Polygon):
        region = Region.from_polygon(region)
    hs = region.halfplanes
    inside = hs + window.halfplanes()
    if not _feasible(inside):
        return QuantReport(truncated=_feasible(hs))
    # region cap window is nonempty and convex, so it leaves the window iff it leaves it within margin 1
    grown = _bounded_vertices(hs + window.halfplanes(margin=1))
    truncated = any(not window.contains(p) for p in grown)
    for n in nodes:
        if region.side(n.position) != 1:
            raise InvalidDiagram(f"node at {n.position} is not strictly inside the region")
    interior, boundary = [], []
    xs = range(-((-window.x0.numerator) // window.x0.denominator), window.x1.numerator // window.x1.denominator + 1)
    ys = range(-((-window.y0.numerator) // window.y0.denominator), window.y1.numerator // window.y1.denominator + 1)
    for x in xs:
        for y in ys:
            s = region.side((x, y))
            if s == 1:
                interior.append((x, y))
            elif s == 0:
                boundary.append((x, y))
    in_window = [n for n in nodes if window.contains(n.position)]
    classes = _classify(interior, boundary, in_window)
    volume = 2 * _hull_area(_bounded_vertices(inside))
    return QuantReport(tuple(classes.items()), quantization_from_classes(classes.values()), volume,
                       None, truncated)
