import itertools
import random

import pytest

from cyclotomo.certifier import Verdict, certify
from cyclotomo.geometry import INF, direction_from_slope
from cyclotomo.modelset import ModelSetPatch, generate_patch, preset_scheme
from cyclotomo.oracle import PatchTooLarge, determination_check, enumerate_convex_subsets, naive_convex_subsets
from cyclotomo.xray import is_convex_subset, xrays_equal

from conftest import pt


def U4(*slopes):
    return [direction_from_slope(s, 4) for s in slopes]


def family(subsets):
    return sorted(tuple(sorted(z.num for z in C)) for C in subsets)


def test_collinear_three():
    p = ModelSetPatch.from_points([pt(0), pt(1), pt(2)], 4)
    subs = list(enumerate_convex_subsets(p))
    assert len(subs) == 7
    assert not any(set(C) == {pt(0), pt(2)} for C in subs)
    assert subs[0] == []


def test_unit_square_all_subsets():
    p = ModelSetPatch.from_points([pt(0), pt(1), pt(1, 1), pt(0, 1)], 4)
    assert len(list(enumerate_convex_subsets(p))) == 16


def test_each_subset_once_and_convex():
    p = generate_patch(preset_scheme("square"), 4)
    subs = list(enumerate_convex_subsets(p))
    keys = family(subs)
    assert len(keys) == len(set(keys))
    assert all(is_convex_subset(C, p) for C in subs)


def test_count_monotone_in_radius():
    counts = [len(list(enumerate_convex_subsets(generate_patch(preset_scheme("square"), r2)))) for r2 in (1, 2, 4, 5)]
    assert counts == sorted(counts)


def test_size_cap():
    p = generate_patch(preset_scheme("square"), 9)
    with pytest.raises(PatchTooLarge):
        list(enumerate_convex_subsets(p))
    with pytest.raises(PatchTooLarge):
        determination_check(p, U4(0, INF))
    with pytest.raises(PatchTooLarge):
        naive_convex_subsets(generate_patch(preset_scheme("square"), 4))


def test_three_by_three_collision():
    p = generate_patch(preset_scheme("square"), 2)
    U = U4(0, INF)
    rep = determination_check(p, U)
    assert rep.outcome == "collision"
    c = rep.collision
    assert xrays_equal(c.F1, c.F2, U) and set(c.F1) != set(c.F2)
    # the unit square diagonal pair is one of the colliding pairs
    assert xrays_equal([pt(0), pt(1, 1)], [pt(1), pt(0, 1)], U)


def test_three_by_three_no_collision():
    p = generate_patch(preset_scheme("square"), 2)
    rep = determination_check(p, U4(0, 1, 5, INF))
    assert rep.outcome == "no-collision" and rep.subsets_enumerated == 214
    assert "patch scale" in rep.notes


def test_naive_matches_on_small_patches():
    for r2 in (1, 2, 3):
        p = generate_patch(preset_scheme("square"), r2)
        assert family(enumerate_convex_subsets(p)) == family(naive_convex_subsets(p))
    tri = generate_patch(preset_scheme("triangular"), 1)
    assert family(enumerate_convex_subsets(tri)) == family(naive_convex_subsets(tri))


def test_soundness_against_certifier():
    p = generate_patch(preset_scheme("square"), 4)
    for slopes in [(0, INF), (0, 1, INF), (0, 1, 2, INF), (0, 1, 5, INF), (0, 2, -1, INF)]:
        U = U4(*slopes)
        rep = determination_check(p, U)
        if certify(4, U).verdict is Verdict.DETERMINED:
            assert rep.outcome == "no-collision"
        if rep.outcome == "collision":
            assert certify(4, U).verdict is not Verdict.DETERMINED


def test_random_patch_consistency():
    rng = random.Random(7)
    pool = [pt(a, b) for a in range(-3, 4) for b in range(-3, 4)]
    for _ in range(10):
        p = ModelSetPatch.from_points(rng.sample(pool, rng.randint(1, 9)), 4)
        assert family(enumerate_convex_subsets(p)) == family(naive_convex_subsets(p))


def _integer_convex_count(P):
    """Reference count for Gaussian integer patches using integer arithmetic only."""

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def inside(q, S):
        # q in conv(S) iff q is not strictly separated: test via hull of S plus q
        if q in S:
            return True
        if len(S) == 1:
            return False
        for a, b in itertools.combinations(S, 2):
            if cross(a, b, q) == 0 and min(a[0], b[0]) <= q[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= q[1] <= max(a[1], b[1]):
                return True
        for a, b, c in itertools.combinations(S, 3):
            s1, s2, s3 = cross(a, b, q), cross(b, c, q), cross(c, a, q)
            if (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0):
                if cross(a, b, c) != 0:
                    return True
        return False

    count = 0
    for k in range(len(P) + 1):
        for S in itertools.combinations(P, k):
            if all(inside(q, S) is False for q in P if q not in S):
                count += 1
    return count


@pytest.mark.parametrize("r2", [1, 2, 3])
def test_counts_match_integer_reference(r2):
    p = generate_patch(preset_scheme("square"), r2)
    P = [(int(z.num[0]), int(z.num[1])) for z in p.points]
    assert len(list(enumerate_convex_subsets(p))) == _integer_convex_count(P)
