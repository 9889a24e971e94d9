"""Deterministic SVG drawings of base diagrams in the style of the usual figures.

Polygon outline, lattice points (large filled dots inside, small dots on
the boundary), nodes as circled dots, and dashed cuts back to the traded
corner. Lattice points carrying a node are drawn only as the node glyph.
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import ClosedBase, Diagram, require_valid
from .lattice import lattice_points

SCALE = 40
MARGIN = 1
GAP = 2


def _f(x) -> str:
    return f"{float(x) * SCALE:.3f}".rstrip("0").rstrip(".")


def _xy(p, dx=0) -> str:
    # SVG y grows downwards
    return f'{_f(Fraction(p[0]) + dx)},{_f(-Fraction(p[1]))}'


def _diagram_elements(d: Diagram, dx=0) -> list[str]:
    require_valid(d)
    poly = d.polygon
    out = [f'<polygon class="outline" points="{" ".join(_xy(v, dx) for v in poly.vertices)}" '
           'fill="none" stroke="black" stroke-width="2"/>']
    interior, boundary = lattice_points(poly)
    occupied = {(n.position.x, n.position.y) for n in d.nodes}
    for n in sorted(d.nodes, key=lambda n: n.key()):
        a, b = _xy(n.cut_anchor, dx).split(","), _xy(n.position, dx).split(",")
        out.append(f'<line class="cut" x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
                   'stroke="gray" stroke-dasharray="4,3"/>')
    for p in boundary:
        x, y = _xy(p, dx).split(",")
        out.append(f'<circle class="boundary" cx="{x}" cy="{y}" r="2" fill="black"/>')
    for p in interior:
        if p in occupied:
            continue
        x, y = _xy(p, dx).split(",")
        out.append(f'<circle class="interior" cx="{x}" cy="{y}" r="4" fill="black"/>')
    for n in sorted(d.nodes, key=lambda n: n.key()):
        x, y = _xy(n.position, dx).split(",")
        out.append(f'<g class="node" data-multiplicity="{n.multiplicity}">'
                   f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>'
                   f'<circle cx="{x}" cy="{y}" r="7" fill="none" stroke="black"/></g>')
    return out


def _bbox(d: Diagram):
    xs = [v.x for v in d.polygon.vertices]
    ys = [v.y for v in d.polygon.vertices]
    return min(xs), min(ys), max(xs), max(ys)


def render(obj: Diagram | ClosedBase) -> str:
    if isinstance(obj, ClosedBase):
        ax0, ay0, ax1, ay1 = _bbox(obj.half_a)
        bx0, by0, bx1, by1 = _bbox(obj.half_b)
        shift = ax1 + GAP - bx0
        elements = _diagram_elements(obj.half_a) + _diagram_elements(obj.half_b, dx=shift)
        x0, y0, x1, y1 = min(ax0, bx0 + shift), min(ay0, by0), max(ax1, bx1 + shift), max(ay1, by1)
    else:
        elements = _diagram_elements(obj)
        x0, y0, x1, y1 = _bbox(obj)
    x0, y0, x1, y1 = x0 - MARGIN, y0 - MARGIN, x1 + MARGIN, y1 + MARGIN
    w, h = _f(x1 - x0), _f(y1 - y0)
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_f(x0)} {_f(-y1)} {w} {h}" '
            f'width="{w}" height="{h}">')
    return "\n".join([head, *("  " + e for e in elements), "</svg>"]) + "\n"
