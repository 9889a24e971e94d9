import os
import sys

import pytest
from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", deadline=None)
settings.load_profile("default")

sys.path.insert(0, os.path.dirname(__file__))

from atq.lattice import Unimodular  # noqa: E402
from oracles import convex_hull  # noqa: E402

GENERATORS = [Unimodular(0, -1, 1, 0), Unimodular(1, 1, 0, 1), Unimodular(1, -1, 0, 1), Unimodular(0, 1, 1, 0)]


@st.composite
def unimodular(draw, orientation_preserving=False, max_len=6):
    gens = GENERATORS[:3] if orientation_preserving else GENERATORS
    word = draw(st.lists(st.sampled_from(gens), max_size=max_len))
    A = Unimodular.identity()
    for g in word:
        A = A @ g
    return A


translations = st.tuples(st.integers(-20, 20), st.integers(-20, 20))


@st.composite
def integral_convex_polygon(draw, box=12):
    pts = draw(st.lists(st.tuples(st.integers(-box, box), st.integers(-box, box)), min_size=3, max_size=12))
    hull = convex_hull(pts)
    from hypothesis import assume
    assume(len(hull) >= 3)
    return hull


@pytest.fixture
def k3_half():
    from atq.catalog import k3_half
    return k3_half()
