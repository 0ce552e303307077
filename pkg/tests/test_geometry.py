import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cyclotomo.exact import CycNum, Sign, to_complex_float, zeta
from cyclotomo.geometry import (
    INF,
    Direction,
    angle_order,
    convex_hull,
    cross_ratio,
    direction_from_slope,
    in_hull,
    is_lambda_direction,
    orientation,
    slope_of,
    strictly_inside,
)

from conftest import cycnums, nonzero_cycnums, pt, rationals

i = zeta(4)


def test_slope_examples():
    assert slope_of(CycNum.rational(1)) == 0
    assert slope_of(i) is INF
    assert slope_of(1 + i) == 1


def test_slope_of_zero_rejected():
    with pytest.raises(ValueError):
        slope_of(CycNum(4, [0, 0]))


def test_angle_order_example():
    assert angle_order([INF, 0, -1, 1]) == [1, 3, 0, 2]
    assert angle_order([0]) == [0]
    with pytest.raises(ValueError):
        angle_order([1, 1])


def test_angle_order_matches_float_angles():
    z = zeta(12)
    dirs = [Direction(CycNum.rational(1, 12)), Direction(1 + z), Direction(z)]
    perm = angle_order([d.slope for d in dirs])
    assert perm == sorted(range(3), key=lambda k: dirs[k].angle)


def test_cross_ratio_examples():
    assert cross_ratio(0, 1, 2, INF) == 2
    assert cross_ratio(1, 2, 3, 4) == Fraction(4, 3)
    assert cross_ratio(0, 1, 3, INF) == Fraction(3, 2)
    assert cross_ratio(0, 1, 5, INF) == Fraction(5, 4)


def test_cross_ratio_needs_distinct_slopes():
    with pytest.raises(ValueError):
        cross_ratio(0, 1, 1, 2)
    with pytest.raises(ValueError):
        cross_ratio(0, INF, 1, INF)


def test_orientation_examples():
    assert orientation(pt(0), pt(1), pt(1, 1)) is Sign.POSITIVE
    assert orientation(pt(0), pt(1), pt(2)) is Sign.ZERO
    assert orientation(pt(0), pt(1, 1), pt(1)) is Sign.NEGATIVE


def test_hull_examples():
    pts = [pt(0), pt(1), pt(0, 1), pt(1, 1), (1 + i) / 2]
    h = convex_hull(pts)
    assert set(h) == {pt(0), pt(1), pt(0, 1), pt(1, 1)}
    assert h[0] == pt(0)
    assert convex_hull([pt(0), pt(1), pt(2)]) == [pt(0), pt(2)]
    assert in_hull((1 + i) / 2, h)
    assert not in_hull(pt(3), [pt(0), pt(2)])
    assert in_hull(pt(1), [pt(0), pt(2)])
    assert strictly_inside((1 + i) / 2, h) and not strictly_inside(pt(1), h)


def test_direction_from_slope_inside_ring():
    for n in (4, 8, 12):
        for s in (0, 1, -1, INF):
            d = direction_from_slope(s, n)
            assert d.slope == s if s is not INF else d.slope is INF
            assert is_lambda_direction(d, n)
    assert direction_from_slope(5, 4).slope == 5
    assert direction_from_slope(Fraction(1, 2), 4).slope == Fraction(1, 2)
    # slope 1 is at 45 degrees, which is not a direction of Z[zeta_3]
    with pytest.raises(ValueError):
        direction_from_slope(1, 3)
    with pytest.raises(ValueError):
        direction_from_slope(5, 5)


def test_direction_dodecagon_slopes():
    for k in range(12):
        v = zeta(12, k // 2) if k % 2 == 0 else zeta(12, k // 2) + zeta(12, k // 2 + 1)
        d = Direction(v)
        assert math.isclose(d.angle, k * math.pi / 12, abs_tol=1e-12)
        assert is_lambda_direction(d, 12)


def test_direction_rejects_zero():
    with pytest.raises(ValueError):
        Direction(CycNum(4, [0, 0]))


# properties


@given(nonzero_cycnums(), rationals(1, 20))
def test_slope_invariant_under_sign_and_scaling(z, lam):
    s = slope_of(z)
    t1, t2 = slope_of(-z), slope_of(z * lam)
    if s is INF:
        assert t1 is INF and t2 is INF
    else:
        assert t1 == s and t2 == s


def _mobius(t, a, b, c, d):
    if t is INF:
        return INF if c == 0 else CycNum.rational(Fraction(a, c))
    den = c * t + d
    if den == 0:
        return INF
    return (a * t + b) / den


@given(
    st.lists(rationals(), min_size=4, max_size=4, unique=True),
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.booleans(),
)
def test_cross_ratio_projective_invariance(ts, a, b, c, d, use_inf):
    assume(a * d - b * c != 0)
    ts = [CycNum.rational(t) for t in ts]
    if use_inf:
        ts[3] = INF
    before = cross_ratio(*ts)
    after = cross_ratio(*[_mobius(t, a, b, c, d) for t in ts])
    assert before == after


@given(st.lists(st.integers(0, 11), min_size=4, max_size=4, unique=True), st.integers(1, 11))
def test_cross_ratio_rotation_invariance(ks, r):
    def vec(k):
        return zeta(12, k // 2) if k % 2 == 0 else zeta(12, k // 2) + zeta(12, k // 2 + 1)

    dirs = [Direction(vec(k)) for k in ks]
    rot = [Direction(vec(k) * zeta(24, r)) for k in ks]
    s1 = [x.slope for x in dirs]
    s2 = [x.slope for x in rot]
    assert cross_ratio(*s1) == cross_ratio(*s2)


@given(st.lists(nonzero_cycnums(order=12), min_size=2, max_size=6))
def test_angle_order_consistent_with_precise_angles(vs):
    dirs = []
    for v in vs:
        d = Direction(v)
        if d not in dirs:
            dirs.append(d)
    perm = angle_order([d.slope for d in dirs])
    angles = []
    for d in dirs:
        c = to_complex_float(d.vector, 256).center
        a = math.atan2(c.imag, c.real) % math.pi
        angles.append(a)
    for x, y in zip(perm, perm[1:]):
        assert angles[x] <= angles[y] + 1e-12


@given(cycnums(order=12), cycnums(order=12), cycnums(order=12), cycnums(order=12))
def test_orientation_symmetries(p, q, r, t):
    o = orientation(p, q, r)
    assert orientation(q, p, r) == -o
    assert orientation(q, r, p) == o
    assert orientation(p + t, q + t, r + t) == o
    assert orientation(p * zeta(12), q * zeta(12), r * zeta(12)) == o


@given(st.lists(cycnums(order=8, lo=-3, hi=3, max_den=1), min_size=1, max_size=12))
def test_hull_idempotent_and_contains_all(ps):
    h = convex_hull(ps)
    assert convex_hull(h) == h
    assert all(in_hull(p, h) for p in ps)


def test_vertical_collinear_triple():
    assert orientation(pt(1, -2), pt(1, 1), pt(1, 0)) is Sign.ZERO
    assert in_hull(pt(1, 0), convex_hull([pt(1, -2), pt(1, 1)]))


@given(cycnums(), nonzero_cycnums(), rationals(), rationals())
def test_collinear_points_have_zero_orientation(p, v, s, t):
    assert orientation(p, p + s * v, p + t * v) is Sign.ZERO
