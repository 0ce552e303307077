from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from cyclotomo.exact import CycNum, euler_phi
from cyclotomo.geometry import Direction

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ORDERS = [3, 4, 5, 8, 12, 24]


@st.composite
def cycnums(draw, order=None, lo=-6, hi=6, max_den=5):
    N = draw(st.sampled_from(ORDERS)) if order is None else order
    num = draw(st.lists(st.integers(lo, hi), min_size=euler_phi(N), max_size=euler_phi(N)))
    den = draw(st.integers(1, max_den))
    return CycNum(N, num, den)


@st.composite
def nonzero_cycnums(draw, order=None):
    a = draw(cycnums(order))
    if a.is_zero():
        a = a + 1
    return a


@st.composite
def rationals(draw, lo=-20, hi=20, max_den=9):
    return Fraction(draw(st.integers(lo, hi)), draw(st.integers(1, max_den)))


@st.composite
def directions(draw, order):
    v = draw(nonzero_cycnums(order))
    return Direction(v)


def pt(x, y=0):
    """Gaussian integer point x + y*i in Q(zeta_4)."""
    return CycNum(4, [x, y])


@pytest.fixture
def square_patch_25():
    from cyclotomo.modelset import generate_patch, preset_scheme

    return generate_patch(preset_scheme("square"), 25)
