import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclotomo.exact import zeta
from cyclotomo.geometry import INF, Direction, direction_from_slope
from cyclotomo.modelset import generate_patch, preset_scheme
from cyclotomo.xray import is_convex_subset, line_key, xray, xrays_equal

from conftest import cycnums, pt, rationals

H = direction_from_slope(0, 4)


def test_line_key_examples():
    for x in (-3, 0, 2, 7):
        assert line_key(pt(x), H) == 0
    k = line_key(zeta(4), H)
    assert k != 0
    v = H.vector
    # the key is p*conj(v) - conj(p)*v scaled by 1/(v + conj(v))
    assert k * (v + v.conjugate()) == 2 * zeta(4)


def test_line_key_independent_of_witness():
    d1 = Direction(1 + zeta(4))
    d2 = Direction(-3 - 3 * zeta(4))
    for p in (pt(2, 5), pt(-1, 0), zeta(8)):
        assert line_key(p, d1) == line_key(p, d2)
    v1, v2 = Direction(zeta(4)), Direction(-5 * zeta(4))
    assert line_key(pt(3, 1), v1) == line_key(pt(3, 1), v2)


@given(cycnums(order=8), rationals(), cycnums(order=8))
def test_line_key_constant_along_line(p, q, v):
    if v.is_zero():
        v = v + 1
    d = Direction(v)
    assert line_key(p, d) == line_key(p + q * v, d)


def test_xray_examples():
    assert list(xray([pt(0)], H).lines.values()) == [1]
    prof = xray([pt(0), pt(1), zeta(4)], H)
    assert sorted(prof.lines.values()) == [1, 2]
    assert prof.total == 3
    with pytest.raises(ValueError):
        xray([pt(0), pt(0)], H)


def test_xrays_equal_examples():
    F = [pt(0), pt(1, 1)]
    assert xrays_equal(F, F, [H])
    assert xrays_equal([pt(0)], [pt(1)], [H])
    assert not xrays_equal([pt(0)], [pt(0, 1)], [H])
    assert not xrays_equal([pt(0)], [pt(0), pt(1)], [H])


def test_profile_json():
    prof = xray([pt(0), pt(1), zeta(4)], H).to_json()
    assert [e["count"] for e in prof["lines"]] == [2, 1]
    json.dumps(prof)


def test_convex_subset_examples():
    p = generate_patch(preset_scheme("square"), 9)
    assert is_convex_subset([], p)
    assert all(is_convex_subset([z], p) for z in p.points)
    assert is_convex_subset([pt(0), pt(1, 1)], p)
    assert not is_convex_subset([pt(0), pt(2)], p)
    with pytest.raises(ValueError):
        is_convex_subset([pt(9)], p)


@given(st.lists(st.sampled_from([(a, b) for a in range(-2, 3) for b in range(-2, 3)]), unique=True, max_size=8),
       cycnums(order=4, max_den=1))
def test_translation_covariance(F, t):
    F = [pt(a, b) for a, b in F]
    G = [p + t for p in F]
    for s in (0, 1, 2, INF):
        d = direction_from_slope(s, 4)
        assert sorted(xray(F, d).lines.values()) == sorted(xray(G, d).lines.values())


@given(st.lists(st.sampled_from([(a, b) for a in range(-2, 3) for b in range(-2, 3)]), unique=True, max_size=10))
def test_total_and_conjugation(F):
    patch = generate_patch(preset_scheme("square"), 8)
    F = [pt(a, b) for a, b in F]
    assert xray(F, H).total == len(F)
    assert is_convex_subset(F, patch) == is_convex_subset([z.conjugate() for z in F], patch)


def test_equivalence_relation():
    U = [direction_from_slope(s, 4) for s in (0, INF)]
    A = [pt(0), pt(1, 1)]
    B = [pt(1), pt(0, 1)]
    C = [pt(1, 1), pt(0)]
    assert xrays_equal(A, B, U) and xrays_equal(B, A, U) and xrays_equal(B, C, U) and xrays_equal(A, C, U)
