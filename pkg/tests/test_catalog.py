from fractions import Fraction

import numpy as np
import pytest

from atq.catalog import (
    BLOWUP9_VERTICES, CATALOG, K3_NODE_POSITIONS, MomentSample, build, cp2, cp2_blowup3, cp2_blowup9, k3,
    sample_spin_oscillator, sample_spin_spin, spin_oscillator, spin_spin,
)
from atq.diagram import ClosedBase, Diagram, validate
from atq.errors import InvalidParameter, UnknownFixture
from atq.lattice import Polygon, area, is_delzant, lattice_points
from atq.quantization import kaehler_dimension_k3, quantize, quantize_closed, quantize_semitoric
from oracles import brute_lattice, fan_area

TOL = 1e-12


def test_blowup_chain_matches_vertex_list():
    assert cp2_blowup9().polygon == Polygon(BLOWUP9_VERTICES)
    assert cp2_blowup3().polygon == Polygon([(3, 0), (6, 0), (6, 3), (3, 6), (0, 6), (0, 3)])


def test_blowup9_counts_vs_oracle():
    d = cp2_blowup9()
    interior, boundary = lattice_points(d.polygon)
    bi, bb = brute_lattice(BLOWUP9_VERTICES)
    assert (len(interior), len(boundary)) == (len(bi), len(bb)) == (19, 12)
    assert area(d.polygon) == fan_area(BLOWUP9_VERTICES) == 24
    assert all(ok for _, ok in is_delzant(d.polygon))


def test_k3_nodes():
    c = k3()
    assert len(c.nodes) == 24
    assert sorted((int(n.position.x), int(n.position.y)) for n in c.half_a.nodes) == sorted(K3_NODE_POSITIONS)
    assert c.tag == "K3"


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_fixture_expectations(name):
    spec = CATALOG[name]
    obj = build(name)
    if isinstance(obj, Diagram):
        assert validate(obj) == []
        assert quantize(obj) == spec.expected
    elif isinstance(obj, ClosedBase):
        assert quantize_closed(obj) == spec.expected
        assert kaehler_dimension_k3(obj) == spec.expected_kaehler
    else:
        r = quantize_semitoric(obj.region, obj.nodes, obj.window)
        assert r.truncated


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        build("enriques")


@pytest.mark.parametrize("d", [0, -3])
def test_cp2_bad_size(d):
    with pytest.raises(InvalidParameter):
        cp2(d)


def test_spin_spin_examples():
    north, south = (0, 0, 1), (0, 0, -1)
    assert spin_spin(north, north) == (1.0, 2.0)
    assert spin_spin(south, south) == (0.0, -2.0)
    assert spin_spin(north, south) == (0.0, 0.0)
    assert spin_spin((1, 0, 0), (1, 0, 0)) == (0.5, 0.0)


def test_spin_oscillator_examples():
    assert spin_oscillator(0, 0, (0, 0, 1)) == (1, 0)
    assert spin_oscillator(1, 0, (1, 0, 0)) == (0.5, 0.5)


def test_spin_spin_sample_bounds():
    s = sample_spin_spin(6)
    assert s.points.shape == (6 ** 4, 2)
    f1, f2 = s.points.T
    assert np.all(np.abs(f2) <= 2 + TOL)
    assert np.all(np.abs(f1) <= 1 + TOL)
    # the vectorised sampler agrees with the pointwise map
    assert np.allclose(s.points[7], spin_spin(*_pair(6, 7)), atol=TOL)


def _pair(grid, k):
    th = np.linspace(0.0, np.pi, grid)
    ph = np.linspace(0.0, 2 * np.pi, grid, endpoint=False)
    sphere = [(np.sin(a) * np.cos(b), np.sin(a) * np.sin(b), np.cos(a)) for a in th for b in ph]
    return sphere[k // len(sphere)], sphere[k % len(sphere)]


def test_spin_oscillator_sample_bounds():
    s = sample_spin_oscillator(5, radius=2.0)
    f1, f2 = s.points.T
    assert s.points.shape == (5 ** 4, 2)
    assert np.all(f1 >= -1 - TOL)
    # |<(x,y),(u,v)>|/2 <= |uv|/2 <= radius/2
    assert np.all(np.abs(f2) <= 1 + TOL)
    assert s.to_csv().splitlines()[0] == "f1,f2"


@pytest.mark.parametrize("grid", [0, 1])
def test_sampler_bad_grid(grid):
    with pytest.raises(InvalidParameter):
        sample_spin_spin(grid)
    with pytest.raises(InvalidParameter):
        sample_spin_oscillator(grid)
    with pytest.raises(InvalidParameter):
        sample_spin_oscillator(4, radius=0)


def test_moment_sample_rejects_nan():
    with pytest.raises(ValueError):
        MomentSample(np.array([[np.nan, 0.0]]), "x")


def test_catalog_parameters_exact():
    assert CATALOG["k3_slid"].parameters["delta"] == Fraction(-1, 3)
