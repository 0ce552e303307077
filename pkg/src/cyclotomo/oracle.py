"""Brute-force ground truth for small patches.

Every convex subset C of a patch is conv(S) intersected with the patch
for exactly one set S in strictly convex position, namely the extreme
points of C.  Strictly convex position is hereditary, so a depth-first
search that appends patch indices in increasing order visits every such
S once.  Determination by X-rays is then decided by grouping the subsets
by an exact fingerprint of their X-rays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cmp_to_key

from .geometry import _compare_xy, orientation
from .upolygon import CounterexamplePair
from .xray import is_convex_subset, line_key, xrays_equal

__all__ = [
    "DEFAULT_MAX_POINTS",
    "PatchTooLarge",
    "OracleReport",
    "enumerate_convex_subsets",
    "naive_convex_subsets",
    "determination_check",
]

DEFAULT_MAX_POINTS = 24


class PatchTooLarge(ValueError):
    pass


def _check_size(patch, max_points):
    if len(patch.points) > max_points:
        raise PatchTooLarge(
            f"patch has {len(patch.points)} points, more than max_points={max_points}; use a smaller radius"
        )


class _Table:
    """Exact orientations of all index triples, computed once."""

    def __init__(self, points):
        m = len(points)
        self.m = m
        order = sorted(range(m), key=cmp_to_key(lambda a, b: _compare_xy(points[a], points[b])))
        self.rank = [0] * m
        for r, i in enumerate(order):
            self.rank[i] = r
        self.o = {}
        for i, j, k in itertools.combinations(range(m), 3):
            s = int(orientation(points[i], points[j], points[k]))
            # even permutations keep the sign, odd ones flip it
            for a, b, c, sg in ((i, j, k, s), (j, k, i, s), (k, i, j, s), (j, i, k, -s), (i, k, j, -s), (k, j, i, -s)):
                self.o[a, b, c] = sg

    def orient(self, a, b, c):
        if a == b or b == c or a == c:
            return 0
        return self.o[a, b, c]

    def hull(self, idx):
        """Strict hull (ccw index list) of the given indices."""
        pts = sorted(idx, key=self.rank.__getitem__)
        if len(pts) <= 2:
            return pts
        lower, upper = [], []
        for p in pts:
            while len(lower) >= 2 and self.orient(lower[-2], lower[-1], p) <= 0:
                lower.pop()
            lower.append(p)
        for p in reversed(pts):
            while len(upper) >= 2 and self.orient(upper[-2], upper[-1], p) <= 0:
                upper.pop()
            upper.append(p)
        return lower[:-1] + upper[:-1]

    def inside(self, hull, p):
        """p in the closed hull given as a ccw index list."""
        if p in hull:
            return True
        k = len(hull)
        if k == 1:
            return False
        if k == 2:
            a, b = hull
            if self.orient(a, b, p) != 0:
                return False
            lo, hi = sorted((self.rank[a], self.rank[b]))
            return lo < self.rank[p] < hi
        return all(self.orient(hull[i], hull[(i + 1) % k], p) >= 0 for i in range(k))


def _enumerate_indices(points):
    """Yield (sorted index tuple of C, extreme set size) over all convex subsets."""
    T = _Table(points)
    m = T.m
    yield ()

    def closure(S):
        h = T.hull(S)
        return tuple(p for p in range(m) if T.inside(h, p))

    stack = [(i,) for i in reversed(range(m))]
    while stack:
        S = stack.pop()
        yield closure(S)
        last = S[-1]
        ext = []
        for w in range(last + 1, m):
            cand = S + (w,)
            if len(T.hull(cand)) == len(cand):
                ext.append(cand)
        stack.extend(reversed(ext))


def enumerate_convex_subsets(patch, max_points: int = DEFAULT_MAX_POINTS):
    """Yield each convex subset of the patch once, as a list of points in patch order.

    The empty set comes first, then depth-first over extreme point sets.
    """
    _check_size(patch, max_points)
    pts = list(patch.points)
    for idx in _enumerate_indices(pts):
        yield [pts[i] for i in idx]


def naive_convex_subsets(patch, max_points: int = 12):
    """Power-set filter with is_convex_subset; a reference for tiny patches."""
    _check_size(patch, max_points)
    pts = list(patch.points)
    out = []
    for k in range(len(pts) + 1):
        for C in itertools.combinations(pts, k):
            if is_convex_subset(C, patch):
                out.append(list(C))
    return out


@dataclass
class OracleReport:
    patch_summary: dict
    directions: list
    collision: CounterexamplePair | None
    subsets_enumerated: int
    work_units: int = 0
    notes: str = field(default="")

    @property
    def outcome(self) -> str:
        return "no-collision" if self.collision is None else "collision"


def determination_check(patch, U, max_points: int = DEFAULT_MAX_POINTS) -> OracleReport:
    """First pair of distinct convex subsets with equal X-rays along U, if any."""
    _check_size(patch, max_points)
    U = list(U)
    pts = list(patch.points)
    line_ids = []
    for d in U:
        lut = {}
        line_ids.append([lut.setdefault(line_key(p, d), len(lut)) for p in pts])
    seen = {}
    count = 0
    collision = None
    for idx in _enumerate_indices(pts):
        count += 1
        fp = []
        for ids in line_ids:
            prof = {}
            for i in idx:
                prof[ids[i]] = prof.get(ids[i], 0) + 1
            fp.append(tuple(sorted(prof.items())))
        fp = (len(idx), tuple(fp))
        other = seen.setdefault(fp, idx)
        if other is not idx:
            F1 = [pts[i] for i in other]
            F2 = [pts[i] for i in idx]
            if not (xrays_equal(F1, F2, U) and is_convex_subset(F1, patch) and is_convex_subset(F2, patch)):
                raise ArithmeticError("fingerprint collision failed exact re-verification")
            collision = CounterexamplePair(F1, F2, U)
            break
    summary = {"n": patch.n, "points": len(pts)}
    if getattr(patch, "radius_squared", None) is not None:
        summary["radius_squared"] = str(patch.radius_squared)
    note = (
        "no two convex subsets of this patch share X-rays along U; evidence at patch scale only"
        if collision is None
        else "two distinct convex subsets with equal X-rays along U"
    )
    return OracleReport(summary, U, collision, count, count, note)
