from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from atq.catalog import cp2, cp2_blowup9, k3, k3_half, k3_slid, s2xs2, s2xs2_slid, spherical_pendulum_model
from atq.diagram import ClosedBase, Diagram, Node, nodal_slide, nodal_trade, slide_all, symplectic_sum, transform
from atq.errors import EmptyWindow, NotApplicable
from atq.graded import GradedQuant
from atq.lattice import Point, Polygon
from atq.quantization import (
    ELLIPTIC_BOUNDARY, REGULAR_BS, BSClass, HalfPlane, Region, Window, classify_fibers, focus_focus,
    kaehler_dimension_k3, quantize, quantize_closed, quantize_semitoric, report, report_closed,
    symplectic_volume,
)
from conftest import translations, unimodular


def deg2(f, s):
    return GradedQuant.of({2: (f, s)})


def direct_rule(classes):
    """Regular points give C, focus-focus points give n(p) smooth copies, boundary nothing."""
    f = sum(1 for c in classes if c.kind == BSClass.REGULAR)
    s = sum(c.node_count for c in classes if c.kind == BSClass.FOCUS_FOCUS)
    return deg2(f, s)


def test_classify_s2xs2():
    classes = classify_fibers(s2xs2(True))
    assert classes[(1, 1)] == focus_focus(1)
    assert [c for p, c in classes.items() if p != (1, 1)] == [ELLIPTIC_BOUNDARY] * 8


def test_classify_cp2():
    classes = list(classify_fibers(cp2(9)).values())
    assert classes.count(REGULAR_BS) == 28
    assert classes.count(ELLIPTIC_BOUNDARY) == 27


def test_classify_k3_half():
    classes = list(classify_fibers(k3_half()).values())
    assert classes.count(focus_focus(1)) == 12
    assert classes.count(REGULAR_BS) == 7


def test_quantize_examples():
    assert quantize(s2xs2(True)) == deg2(0, 1)
    assert quantize(cp2(9)) == deg2(28, 0)
    assert quantize(slide_all(k3_half(), Fraction(-1, 3))) == deg2(19, 0)
    assert quantize(s2xs2_slid()) == deg2(1, 0)


def test_quantize_closed_examples():
    assert quantize_closed(k3()) == deg2(14, 24)
    assert quantize_closed(k3_slid()) == deg2(38, 0)
    tiny = Diagram(Polygon([(0, 0), (1, 0), (0, 1)]))
    for k in range(3):
        tiny = nodal_trade(tiny, k, Fraction(1, 4))
    assert quantize_closed(symplectic_sum(tiny, tiny)).is_zero


def test_multiplicity():
    d = nodal_trade(s2xs2(False), 2, 1, multiplicity=3)
    assert classify_fibers(d)[(1, 1)] == focus_focus(3)
    assert quantize(d) == deg2(0, 3)


def test_volumes():
    assert symplectic_volume(cp2_blowup9()) == 48
    assert symplectic_volume(Diagram(Polygon([(0, 0), (1, 0), (1, 1), (0, 1)]))) == 2
    assert symplectic_volume(k3()) == 96
    assert kaehler_dimension_k3(k3()) == 50


def test_kaehler_needs_k3_tag():
    small = Diagram(Polygon([(0, 0), (1, 0), (0, 1)]))
    for k in range(3):
        small = nodal_trade(small, k, Fraction(1, 4))
    # two halves of area 1/2 each: (1 + 1)/2 + 2
    assert kaehler_dimension_k3(symplectic_sum(small, small, tag="K3")) == 3
    sq = Diagram(Polygon([(0, 0), (1, 0), (1, 1), (0, 1)]))
    for k in range(4):
        sq = nodal_trade(sq, k, Fraction(1, 4))
    assert kaehler_dimension_k3(symplectic_sum(sq, sq, tag="K3")) == 4
    with pytest.raises(NotApplicable):
        kaehler_dimension_k3(symplectic_sum(sq, sq))


def test_report_consistency():
    for d in (cp2(9), k3_half(), s2xs2(True)):
        r = report(d)
        assert r.total == direct_rule([c for _, c in r.classification])
    r = report_closed(k3())
    assert r.kaehler_dimension == 50 and r.symplectic_volume == 96
    assert {e[2] for e in r.classification} == {"a", "b"}


FIXTURES = [cp2(9), cp2_blowup9(), k3_half(), s2xs2(False), s2xs2(True), s2xs2_slid()]


@given(unimodular(), translations)
def test_unimodular_invariance(A, t):
    for d in FIXTURES:
        assert quantize(transform(d, A, t)) == quantize(d)


def test_slide_monotonicity():
    d = k3_half()
    base = quantize(d)
    for i in range(len(d.nodes)):
        s = nodal_slide(d, i, d.nodes[i].t - Fraction(1, 3))
        q = quantize(s)
        assert q.finite(2) == base.finite(2) + 1
        assert q.smooth(2) == base.smooth(2) - d.nodes[i].multiplicity
        changed = {p for p, c in classify_fibers(s).items() if classify_fibers(d)[p] != c}
        assert changed == {(int(d.nodes[i].position.x), int(d.nodes[i].position.y))}


def test_trade_locality():
    d = s2xs2(False)
    t = s2xs2(True)
    before, after = classify_fibers(d), classify_fibers(t)
    assert before.keys() == after.keys()
    assert {p for p in before if before[p] != after[p]} == {(1, 1)}
    assert symplectic_volume(d) == symplectic_volume(t)


def test_additivity():
    c = k3()
    assert quantize_closed(c) == quantize(c.half_a) + quantize(c.half_b)


# --- semitoric ---------------------------------------------------------------


def test_pendulum_bs():
    m = spherical_pendulum_model(True)
    r = quantize_semitoric(m.region, m.nodes, m.window)
    classes = dict(r.classification)
    assert classes[(0, 2)] == focus_focus(1)
    assert r.truncated
    assert r.total.smooth(2) == 1
    # window -5..5 x 0..10: 11 boundary points on y = 0, 11*10 - 1 regular
    assert r.total.finite(2) == 109


def test_pendulum_generic():
    m = spherical_pendulum_model(False)
    r = quantize_semitoric(m.region, m.nodes, m.window)
    assert r.total.smooth(2) == 0
    assert r.total.finite(2) == 110


def test_semitoric_empty_region():
    region = Region((HalfPlane.of(1, 0, -100),))  # x <= -100
    r = quantize_semitoric(region, (), Window.of(0, 0, 5, 5))
    assert r.total.is_zero and r.classification == ()
    infeasible = Region((HalfPlane.of(1, 0, 0), HalfPlane.of(-1, 0, -1)))  # x <= 0 and x >= 1
    r = quantize_semitoric(infeasible, (), Window.of(0, 0, 5, 5))
    assert r.total.is_zero and not r.truncated


def test_semitoric_polygon_not_truncated():
    r = quantize_semitoric(cp2(9).polygon, (), Window.of(-1, -1, 10, 10))
    assert not r.truncated
    assert r.total == deg2(28, 0)
    assert r.symplectic_volume == 81
    r = quantize_semitoric(cp2(9).polygon, (), Window.of(0, 0, 5, 5))
    assert r.truncated


@pytest.mark.parametrize("w", [(0, 0, 0, 5), (3, 0, 1, 5), (0, 5, 5, 5)])
def test_empty_window(w):
    with pytest.raises(EmptyWindow):
        Window.of(*w)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 6), st.integers(1, 6))
def test_semitoric_matches_polygon(x0, y0, w, h):
    # a bounded region entirely inside the window quantizes like the diagram
    d = k3_half()
    region = Region.from_polygon(d.polygon)
    win = Window.of(x0 - 10, y0 - 10, x0 + 10 + w, y0 + 10 + h)
    r = quantize_semitoric(region, d.nodes, win)
    assert not r.truncated
    assert r.total == quantize(d)
