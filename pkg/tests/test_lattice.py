from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atq.errors import GeometricOverlap, InvalidParameter, InvalidPolygon, NonDelzant, NotApplicable
from atq.lattice import (
    Polygon, Unimodular, apply_unimodular, area, corner_chop, is_delzant, lattice_length,
    lattice_points, pick_check, primitive,
)
from conftest import integral_convex_polygon, translations, unimodular
from oracles import brute_lattice, fan_area

CP2_9 = [(0, 0), (9, 0), (0, 9)]
SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
BLOWUP9 = [(4, 0), (5, 0), (6, 1), (6, 2), (5, 4), (4, 5), (2, 6), (1, 6), (0, 5), (0, 4), (1, 2), (2, 1)]


def test_canonical_form():
    p = Polygon(list(reversed(BLOWUP9)))
    assert p.vertices[0] == (0, 4)
    assert p == Polygon(BLOWUP9)
    assert area(p) > 0


@pytest.mark.parametrize("verts", [
    [(0, 0), (1, 0)],
    [(0, 0), (1, 0), (2, 0)],
    [(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)],
    [(0, 0), (1, 0), (2, 0), (1, 1)],
])
def test_rejects_bad_polygons(verts):
    with pytest.raises(InvalidPolygon):
        Polygon(verts)


def test_rejects_pentagram():
    star = [(0, 3), (-2, -2), (3, 1), (-3, 1), (2, -2)]
    with pytest.raises(InvalidPolygon):
        Polygon(star)


@pytest.mark.parametrize("verts, expected", [
    (CP2_9, Fraction(81, 2)),
    (SQUARE, Fraction(1)),
    (BLOWUP9, Fraction(24)),
])
def test_area(verts, expected):
    assert area(Polygon(verts)) == expected


@pytest.mark.parametrize("verts, n_int, n_bdy", [
    (CP2_9, 28, 27),
    (SQUARE, 0, 4),
    (BLOWUP9, 19, 12),
])
def test_lattice_points(verts, n_int, n_bdy):
    interior, boundary = lattice_points(Polygon(verts))
    assert (len(interior), len(boundary)) == (n_int, n_bdy)
    assert (interior, boundary) == brute_lattice(verts)
    assert interior == sorted(interior)


def test_lattice_points_rational_vertices():
    verts = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(7, 2), 0), (2, Fraction(9, 4))]
    assert lattice_points(Polygon(verts)) == brute_lattice(verts)


@pytest.mark.parametrize("verts", [CP2_9, SQUARE, BLOWUP9])
def test_pick(verts):
    assert pick_check(Polygon(verts))


def test_pick_needs_integral_vertices():
    with pytest.raises(NotApplicable):
        pick_check(Polygon([(0, 0), (Fraction(1, 2), 0), (0, 1)]))


DET2 = [(0, 0), (3, 0), (3, 3), (1, 2)]


def test_is_delzant():
    assert all(ok for _, ok in is_delzant(Polygon(CP2_9)))
    assert [ok for _, ok in is_delzant(Polygon(BLOWUP9))] == [True] * 12
    # at the origin the edges are (1,0) and (1,2): determinant 2
    p = Polygon(DET2)
    flags = dict(is_delzant(p))
    assert flags[p.index((0, 0))] is False
    assert p.corner_det(p.index((0, 0))) == 2


def test_primitive():
    assert primitive((4, -6)) == (2, -3)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    with pytest.raises(InvalidParameter):
        primitive((0, 0))
    assert lattice_length((0, 0), (3, 6)) == 3


def test_corner_chop_fig1():
    p = Polygon(CP2_9)
    for v in [(0, 0), (9, 0), (0, 9)]:
        p = corner_chop(p, p.index(v), 3)
    assert set(p.vertices) == {(3, 0), (6, 0), (6, 3), (3, 6), (0, 6), (0, 3)}
    assert area(p) == 27
    for v in [(3, 0), (6, 0), (6, 3), (3, 6), (0, 6), (0, 3)]:
        p = corner_chop(p, p.index(v), 1)
    assert p == Polygon(BLOWUP9)
    assert area(p) == 24


def test_corner_chop_errors():
    p = Polygon(CP2_9)
    with pytest.raises(InvalidParameter):
        corner_chop(p, 0, 0)
    with pytest.raises(GeometricOverlap):
        corner_chop(p, 0, 9)
    with pytest.raises(NonDelzant):
        bad = Polygon(DET2)
        corner_chop(bad, bad.index((0, 0)), Fraction(1, 10))


@given(size=st.fractions(min_value=Fraction(1, 50), max_value=Fraction(4)), corner=st.integers(0, 2))
def test_corner_chop_area_drop(size, corner):
    p = Polygon(CP2_9)
    q = corner_chop(p, corner, size)
    assert area(p) - area(q) == size * size / 2


@given(size=st.integers(1, 4), corner=st.integers(0, 2))
def test_corner_chop_locality(size, corner):
    p = Polygon(CP2_9)
    v = p.vertices[corner]
    q = corner_chop(p, corner, size)
    far = lambda pts: {x for x in pts if max(abs(x[0] - v.x), abs(x[1] - v.y)) > size}
    assert far(lattice_points(p)[0]) == far(lattice_points(q)[0])


def test_apply_unimodular_examples():
    p = Polygon(SQUARE)
    assert apply_unimodular(p, Unimodular.identity()) == p
    assert area(apply_unimodular(p, Unimodular(1, 1, 0, 1))) == 1
    swapped = apply_unimodular(Polygon(CP2_9), Unimodular(0, 1, 1, 0))
    assert len(lattice_points(swapped)[0]) == 28


def test_unimodular_rejects_det():
    with pytest.raises(InvalidParameter):
        Unimodular(2, 0, 0, 1)


@settings(max_examples=200)
@given(integral_convex_polygon())
def test_pick_random(verts):
    p = Polygon(verts)
    interior, boundary = brute_lattice(p.vertices)
    assert area(p) == fan_area(p.vertices)
    assert area(p) == len(interior) + Fraction(len(boundary), 2) - 1
    assert pick_check(p)


@given(integral_convex_polygon(box=6), unimodular(), translations)
def test_lattice_counts_invariant(verts, A, t):
    p = Polygon(verts)
    q = apply_unimodular(p, A, t)
    a, b = lattice_points(p)
    c, d = lattice_points(q)
    assert (len(a), len(b)) == (len(c), len(d))
    assert area(p) == area(q)


@given(unimodular(), translations)
def test_delzant_invariant(A, t):
    for verts in (BLOWUP9, DET2):
        p = Polygon(verts)
        q = apply_unimodular(p, A, t)
        before = {p.vertices[i]: ok for i, ok in is_delzant(p)}
        after = {q.vertices[i]: ok for i, ok in is_delzant(q)}
        for v, ok in before.items():
            image = tuple(x + y for x, y in zip(A.apply(v), t))
            assert after[image] == ok


@given(st.fractions(), st.fractions(max_denominator=10**6).filter(bool),
       st.fractions(), st.fractions(max_denominator=10**6).filter(bool))
def test_fraction_arithmetic_exact(a, b, c, d):
    lhs = (a / b + c / d) * d * b
    rhs = a * d + c * b
    assert lhs == rhs
