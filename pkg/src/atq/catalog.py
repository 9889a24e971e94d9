"""Worked examples: toric and almost toric fixtures plus moment-map samplers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .diagram import ClosedBase, Diagram, Node, nodal_slide, nodal_trade, slide_all, symplectic_sum
from .errors import InvalidParameter, UnknownFixture
from .graded import GradedQuant
from .lattice import Point, Polygon, corner_chop
from .quantization import HalfPlane, Region, Window

BLOWUP9_VERTICES = [(4, 0), (5, 0), (6, 1), (6, 2), (5, 4), (4, 5), (2, 6), (1, 6), (0, 5), (0, 4), (1, 2), (2, 1)]

# Nodes of the traded nine-fold blowup, one per corner, on the lattice ring next to the boundary.
# Each corner v sends its node along u + w; the t values alternate 1, 2 so no two cuts cross.
K3_TRADES = [
    ((4, 0), 1), ((5, 0), 2), ((6, 1), 1), ((6, 2), 2), ((5, 4), 1), ((4, 5), 2),
    ((2, 6), 1), ((1, 6), 2), ((0, 5), 1), ((0, 4), 2), ((1, 2), 1), ((2, 1), 2),
]
K3_NODE_POSITIONS = [(3, 1), (4, 1), (5, 1), (2, 2), (5, 2), (1, 3), (5, 3), (1, 4), (4, 4), (1, 5), (2, 5), (3, 5)]

# Sliding every node back towards its corner by 1/3 keeps all cuts disjoint; sliding outward does not.
K3_SLIDE = Fraction(-1, 3)


def cp2(d: int = 9) -> Diagram:
    if not isinstance(d, int) or d < 1:
        raise InvalidParameter("cp2 needs a positive integer size")
    return Diagram(Polygon([(0, 0), (d, 0), (0, d)]))


def cp2_blowup3() -> Diagram:
    poly = cp2(9).polygon
    for v in [(0, 0), (9, 0), (0, 9)]:
        poly = corner_chop(poly, poly.index(v), 3)
    return Diagram(poly)


def cp2_blowup9() -> Diagram:
    poly = cp2_blowup3().polygon
    for v in [(3, 0), (6, 0), (6, 3), (3, 6), (0, 6), (0, 3)]:
        poly = corner_chop(poly, poly.index(v), 1)
    return Diagram(poly)


def k3_half() -> Diagram:
    d = cp2_blowup9()
    for v, t in K3_TRADES:
        d = nodal_trade(d, d.polygon.index(v), t)
    return d


def k3() -> ClosedBase:
    h = k3_half()
    return symplectic_sum(h, h, tag="K3", note="two copies of the traded CP2#9(-CP2)")


def k3_slid(delta=K3_SLIDE) -> ClosedBase:
    h = slide_all(k3_half(), delta)
    return symplectic_sum(h, h, tag="K3", note=f"all nodes slid by {Fraction(delta)}")


def s2xs2(traded: bool = False) -> Diagram:
    d = Diagram(Polygon([(0, 0), (2, 0), (2, 2), (0, 2)]))
    if traded:
        d = nodal_trade(d, d.polygon.index((2, 2)), 1)
    return d


def s2xs2_slid() -> Diagram:
    return nodal_slide(s2xs2(True), 0, Fraction(3, 2))


@dataclass(frozen=True)
class SemitoricModel:
    region: Region
    nodes: tuple[Node, ...]
    window: Window


def spherical_pendulum_model(bs: bool = True, window=(-5, 0, 5, 10)) -> SemitoricModel:
    """Normalized spherical-pendulum base: the upper half-plane with one node above the origin.

    Action coordinates are scaled so that Bohr-Sommerfeld values are the
    integer points; ``bs`` decides whether the node sits on one.
    """
    height = Fraction(2) if bs else Fraction(5, 2)
    node = Node(Point.of(0, height), (0, 1), 1, Point.of(0, 0))
    return SemitoricModel(Region((HalfPlane.of(0, -1, 0),)), (node,), Window.of(*window))


# --- moment map samplers (floating point, for plotting only) ---------------


@dataclass(frozen=True)
class MomentSample:
    points: np.ndarray
    source: str

    def __post_init__(self):
        if not np.all(np.isfinite(self.points)):
            raise ValueError("moment samples must be finite")

    def to_csv(self) -> str:
        lines = ["f1,f2"] + [f"{f1!r},{f2!r}" for f1, f2 in self.points.tolist()]
        return "\n".join(lines) + "\n"


def _sphere_grid(grid: int) -> np.ndarray:
    theta = np.linspace(0.0, np.pi, grid)
    phi = np.linspace(0.0, 2 * np.pi, grid, endpoint=False)
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    pts = np.stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=-1)
    return pts.reshape(-1, 3)


def spin_spin(p1, p2) -> tuple[float, float]:
    """(f1, f2) of the coupled spin-spin system at ``p1, p2`` on the unit sphere."""
    p1, p2 = np.asarray(p1, float), np.asarray(p2, float)
    return float(p1[2] / 2 + p1 @ p2 / 2), float(p1[2] + p2[2])


def spin_oscillator(u: float, v: float, p) -> tuple[float, float]:
    x, y, z = p
    return z + (u * u + v * v) / 2, (x * u + y * v) / 2


def sample_spin_spin(grid: int) -> MomentSample:
    if grid < 2:
        raise InvalidParameter("grid must be at least 2")
    s = _sphere_grid(grid)
    a = np.repeat(s, len(s), axis=0)
    b = np.tile(s, (len(s), 1))
    f1 = a[:, 2] / 2 + np.einsum("ij,ij->i", a, b) / 2
    f2 = a[:, 2] + b[:, 2]
    return MomentSample(np.column_stack([f1, f2]), "spin-spin")


def sample_spin_oscillator(grid: int, radius: float = 2.0) -> MomentSample:
    if grid < 2:
        raise InvalidParameter("grid must be at least 2")
    if not radius > 0:
        raise InvalidParameter("radius must be positive")
    r = np.linspace(0.0, radius, grid)
    ang = np.linspace(0.0, 2 * np.pi, grid, endpoint=False)
    rr, aa = np.meshgrid(r, ang, indexing="ij")
    uv = np.column_stack([(rr * np.cos(aa)).ravel(), (rr * np.sin(aa)).ravel()])
    s = _sphere_grid(grid)
    U = np.repeat(uv, len(s), axis=0)
    S = np.tile(s, (len(uv), 1))
    f1 = S[:, 2] + (U ** 2).sum(axis=1) / 2
    f2 = (S[:, 0] * U[:, 0] + S[:, 1] * U[:, 1]) / 2
    return MomentSample(np.column_stack([f1, f2]), "spin-oscillator")


# --- registry ---------------------------------------------------------------


@dataclass(frozen=True)
class ExampleSpec:
    name: str
    build: Callable[[], object]
    description: str
    parameters: dict = field(default_factory=dict)
    expected: GradedQuant | None = None
    expected_kaehler: int | None = None


CATALOG: dict[str, ExampleSpec] = {
    e.name: e for e in [
        ExampleSpec("cp2", lambda: cp2(9), "CP2 as the triangle of size 9", {"d": Fraction(9)},
                    GradedQuant.of({2: (28, 0)})),
        ExampleSpec("cp2_blowup3", cp2_blowup3, "CP2 blown up three times (hexagon)", {},
                    GradedQuant.of({2: (19, 0)})),
        ExampleSpec("cp2_blowup9", cp2_blowup9, "CP2 blown up nine times (12-gon)", {},
                    GradedQuant.of({2: (19, 0)})),
        ExampleSpec("k3_half", k3_half, "12-gon with all corners traded", {},
                    GradedQuant.of({2: (7, 12)})),
        ExampleSpec("k3", k3, "K3 as the boundary sum of two traded halves", {},
                    GradedQuant.of({2: (14, 24)}), 50),
        ExampleSpec("k3_slid", k3_slid, "K3 with all 24 nodes slid off the lattice",
                    {"delta": K3_SLIDE}, GradedQuant.of({2: (38, 0)}), 50),
        ExampleSpec("s2xs2", lambda: s2xs2(False), "S2 x S2 as the square of side 2", {},
                    GradedQuant.of({2: (1, 0)})),
        ExampleSpec("s2xs2_traded", lambda: s2xs2(True), "S2 x S2 with the corner (2,2) traded", {},
                    GradedQuant.of({2: (0, 1)})),
        ExampleSpec("s2xs2_slid", s2xs2_slid, "traded S2 x S2 with the node slid to (1/2,1/2)", {},
                    GradedQuant.of({2: (1, 0)})),
        ExampleSpec("pendulum_bs", lambda: spherical_pendulum_model(True),
                    "spherical pendulum model, focus-focus fibre Bohr-Sommerfeld", {}, None),
        ExampleSpec("pendulum_generic", lambda: spherical_pendulum_model(False),
                    "spherical pendulum model, focus-focus fibre not Bohr-Sommerfeld", {}, None),
    ]
}


def build(name: str):
    try:
        return CATALOG[name].build()
    except KeyError:
        raise UnknownFixture(f"no fixture named {name!r}; try one of {sorted(CATALOG)}") from None

