"""Exact rational planar geometry on the integral affine plane.

Coordinates are :class:`fractions.Fraction`. Polygons are convex, stored
counterclockwise with the lexicographically smallest vertex first, so two
polygons with the same vertex set compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .errors import GeometricOverlap, InvalidParameter, InvalidPolygon, NonDelzant, NotApplicable


def rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coordinate")


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(rat(x), rat(y))

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def scale(self, s) -> "Point":
        return Point(self.x * s, self.y * s)

    @property
    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def cross(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def primitive(v) -> tuple[int, int]:
    """Primitive integer vector positively proportional to the rational vector ``v``."""
    x, y = rat(v[0]), rat(v[1])
    if x == 0 and y == 0:
        raise InvalidParameter("zero vector has no primitive direction")
    den = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    p, q = int(x * den), int(y * den)
    g = gcd(p, q)
    return p // g, q // g


def is_primitive(v) -> bool:
    p, q = v
    return isinstance(p, int) and isinstance(q, int) and (p, q) != (0, 0) and gcd(p, q) == 1


def lattice_length(u, v) -> Fraction:
    """Affine length of the segment from ``u`` to ``v``: the ratio to its primitive direction."""
    d = (rat(v[0]) - rat(u[0]), rat(v[1]) - rat(u[1]))
    p, q = primitive(d)
    return d[0] / p if p else d[1] / q


@dataclass(frozen=True)
class Unimodular:
    """Integer 2x2 matrix ``[[a, b], [c, d]]`` with determinant +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise InvalidParameter(f"determinant {self.det} is not +-1")

    @classmethod
    def identity(cls) -> "Unimodular":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "Unimodular":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def apply(self, v):
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __matmul__(self, other: "Unimodular") -> "Unimodular":
        return Unimodular(
            self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Unimodular":
        s = self.det
        return Unimodular(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __pow__(self, k: int) -> "Unimodular":
        base = self if k >= 0 else self.inverse()
        out = Unimodular.identity()
        for _ in range(abs(k)):
            out = out @ base
        return out


def _shoelace2(vertices: Sequence[Point]) -> Fraction:
    n = len(vertices)
    return sum((cross(vertices[i], vertices[(i + 1) % n]) for i in range(n)), Fraction(0))


class Polygon:
    """Strictly convex rational polygon in canonical counterclockwise form."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable):
        pts = [p if isinstance(p, Point) else Point.of(*p) for p in vertices]
        if len(pts) < 3:
            raise InvalidPolygon("a polygon needs at least 3 vertices")
        if len(set(pts)) != len(pts):
            raise InvalidPolygon("repeated vertex")
        if _shoelace2(pts) < 0:
            pts.reverse()
        n = len(pts)
        for i in range(n):
            turn = cross(pts[(i + 1) % n] - pts[i], pts[(i + 2) % n] - pts[(i + 1) % n])
            if turn <= 0:
                raise InvalidPolygon(f"not strictly convex at {pts[(i + 1) % n]}")
        # a simple walk with all left turns could still wind twice
        if _winding_turns(pts) != 1:
            raise InvalidPolygon("vertex sequence winds more than once")
        k = pts.index(min(pts))
        object.__setattr__(self, "vertices", tuple(pts[k:] + pts[:k]))

    def __setattr__(self, name, value):
        raise AttributeError("Polygon is immutable")

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        inner = ", ".join(f"({v.x}, {v.y})" for v in self.vertices)
        return f"Polygon([{inner}])"

    @property
    def is_integral(self) -> bool:
        return all(v.is_integral for v in self.vertices)

    def index(self, point) -> int:
        p = point if isinstance(point, Point) else Point.of(*point)
        try:
            return self.vertices.index(p)
        except ValueError:
            raise InvalidParameter(f"{p} is not a vertex") from None

    def vertex(self, i: int) -> Point:
        if not 0 <= i < len(self.vertices):
            raise InvalidParameter(f"vertex index {i} out of range 0..{len(self.vertices) - 1}")
        return self.vertices[i]

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def edge_directions(self, i: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Primitive directions (towards next vertex, towards previous vertex) at vertex ``i``."""
        n = len(self.vertices)
        v = self.vertex(i)
        return primitive(self.vertices[(i + 1) % n] - v), primitive(self.vertices[i - 1] - v)

    def corner_det(self, i: int) -> int:
        u, w = self.edge_directions(i)
        return abs(cross(u, w))

    def side(self, p) -> int:
        """+1 strictly inside, 0 on the boundary, -1 outside."""
        worst = 1
        for a, b in self.edges():
            c = cross(b - a, (p[0] - a.x, p[1] - a.y))
            if c < 0:
                return -1
            if c == 0:
                worst = 0
        return worst

    def contains_strictly(self, p) -> bool:
        return self.side(p) == 1

    def perimeter_affine(self) -> Fraction:
        return sum((lattice_length(a, b) for a, b in self.edges()), Fraction(0))


def _winding_turns(pts: Sequence[Point]) -> int:
    # counts how many times the edge directions wrap past angle 0; exact via half-plane crossings
    n = len(pts)
    dirs = [pts[(i + 1) % n] - pts[i] for i in range(n)]
    wraps = 0
    for i in range(n):
        d0, d1 = dirs[i], dirs[(i + 1) % n]
        # crossing the positive x-axis direction ccw: from below (y<0) or on it to y>0 side
        if (d0.y < 0 or (d0.y == 0 and d0.x < 0)) and (d1.y > 0 or (d1.y == 0 and d1.x > 0)):
            wraps += 1
    return wraps


def area(poly: Polygon) -> Fraction:
    return _shoelace2(poly.vertices) / 2


def lattice_points(poly: Polygon) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Integer points of ``poly`` split into (strict interior, boundary), lexicographically sorted."""
    ys = [v.y for v in poly.vertices]
    ymin, ymax = min(ys), max(ys)
    interior, boundary = [], []
    for y in range(_ceil(ymin), _floor(ymax) + 1):
        # exact slice [lo, hi] of the polygon along the row
        cuts = []
        for a, b in poly.edges():
            if a.y == b.y == y:
                cuts += [a.x, b.x]
            elif min(a.y, b.y) <= y <= max(a.y, b.y) and a.y != b.y:
                cuts.append(a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y))
        lo, hi = min(cuts), max(cuts)
        first, last = _ceil(lo), _floor(hi)
        if y in (ymin, ymax):
            boundary += [(x, y) for x in range(first, last + 1)]
            continue
        for x in range(first, last + 1):
            (boundary if x == lo or x == hi else interior).append((x, y))
    return sorted(interior), sorted(boundary)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def pick_check(poly: Polygon) -> bool:
    if not poly.is_integral:
        raise NotApplicable("Pick's formula needs integral vertices")
    interior, boundary = lattice_points(poly)
    return area(poly) == len(interior) + Fraction(len(boundary), 2) - 1


def is_delzant(poly: Polygon) -> list[tuple[int, bool]]:
    if not poly.is_integral:
        raise NotApplicable("the Delzant test is defined for integral vertices")
    return [(i, poly.corner_det(i) == 1) for i in range(len(poly))]


def corner_chop(poly: Polygon, index: int, size) -> Polygon:
    """Cut the corner at ``index`` by ``size`` lattice units along both edges (a toric blowup)."""
    size = rat(size)
    if size <= 0:
        raise InvalidParameter("chop size must be positive")
    v = poly.vertex(index)
    if poly.corner_det(index) != 1:
        raise NonDelzant(f"vertex {index} at {v} is not a Delzant corner")
    n = len(poly)
    nxt, prv = poly.vertices[(index + 1) % n], poly.vertices[index - 1]
    u, w = poly.edge_directions(index)
    if size >= lattice_length(v, nxt) or size >= lattice_length(v, prv):
        raise GeometricOverlap(f"chop of size {size} reaches an adjacent vertex of {v}")
    verts = list(poly.vertices)
    verts[index: index + 1] = [v + Point(size * w[0], size * w[1]), v + Point(size * u[0], size * u[1])]
    try:
        return Polygon(verts)
    except InvalidPolygon as exc:
        raise GeometricOverlap(f"chop of size {size} at {v} overlaps: {exc}") from None


def apply_unimodular(poly: Polygon, A: Unimodular, t=(0, 0)) -> Polygon:
    t = Point.of(*t)
    return Polygon([Point(*A.apply(v)) + t for v in poly.vertices])


def transform_point(p, A: Unimodular, t) -> Point:
    return Point(*A.apply(p)) + Point.of(*t)
