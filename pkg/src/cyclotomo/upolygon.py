"""U-polygons: verification, search in finite patches, counterexamples.

A nondegenerate convex polygon P is a U-polygon when for every vertex v
and every direction u in U the line through v parallel to u meets a
second vertex of P.  A U-polygon whose vertices alternate between two
colour classes along every such line yields two different convex sets
with equal X-rays in all directions of U.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

import itertools

from .certifier import MAGIC_TABLE, _arranged_cross_ratio
from .exact import CycNum, zeta
from .forbidden import contains, forbidden_set
from .geometry import Direction, _compare_xy, as_point, convex_hull, in_hull, orientation, strictly_inside
from .xray import is_convex_subset, line_key, xray

__all__ = [
    "UPolygon",
    "CounterexamplePair",
    "Verification",
    "SearchResult",
    "CounterexampleError",
    "verify_upolygon",
    "search_upolygon",
    "derive_counterexample",
    "patch_symmetries",
]


@dataclass
class UPolygon:
    vertices: list  # counterclockwise, strictly convex
    directions: list


@dataclass
class CounterexamplePair:
    F1: list
    F2: list
    directions: list
    black: list = field(default_factory=list)
    grey: list = field(default_factory=list)
    interior: list = field(default_factory=list)


@dataclass
class Verification:
    ok: bool
    reason: str = ""
    vertex: CycNum | None = None
    direction: Direction | None = None

    def __bool__(self):
        return self.ok


class CounterexampleError(ValueError):
    pass


def _strictly_convex_ccw(vertices) -> bool:
    hull = convex_hull(vertices)
    k = len(vertices)
    if len(hull) != k or k < 3:
        return False
    start = vertices.index(hull[0])
    return all(vertices[(start + i) % k] == hull[i] for i in range(k))


def verify_upolygon(vertices, U) -> Verification:
    vertices = [as_point(v) for v in vertices]
    if len(vertices) < 3:
        raise ValueError("a polygon needs at least three vertices")
    if not _strictly_convex_ccw(vertices):
        return Verification(False, "vertices are not a strictly convex counterclockwise polygon")
    for d in U:
        keys = [line_key(v, d) for v in vertices]
        for v, k in zip(vertices, keys):
            if keys.count(k) < 2:
                return Verification(False, "line through vertex meets no other vertex", v, d)
    return Verification(True)


# search


class _Budget(Exception):
    pass


class _IndexGeometry:
    """Orientation memo and line tables over patch indices."""

    def __init__(self, points, U):
        self.points = points
        order = sorted(range(len(points)), key=cmp_to_key(lambda a, b: _compare_xy(points[a], points[b])))
        self.rank = [0] * len(points)
        for r, i in enumerate(order):
            self.rank[i] = r
        self._orient = {}
        self.line_of = []  # per direction: point index -> line id
        self.members = []  # per direction: line id -> sorted point indices
        for d in U:
            ids, mem, lut = [], [], {}
            for i, p in enumerate(points):
                k = line_key(p, d)
                lid = lut.setdefault(k, len(mem))
                if lid == len(mem):
                    mem.append([])
                mem[lid].append(i)
                ids.append(lid)
            self.line_of.append(ids)
            self.members.append(mem)

    def orient(self, i, j, k):
        key = (i, j, k)
        s = self._orient.get(key)
        if s is None:
            s = int(orientation(self.points[i], self.points[j], self.points[k]))
            self._orient[key] = s
        return s

    def hull_size(self, idx):
        pts = sorted(idx, key=self.rank.__getitem__)
        if len(pts) <= 2:
            return len(pts)
        lower, upper = [], []
        for p in pts:
            while len(lower) >= 2 and self.orient(lower[-2], lower[-1], p) <= 0:
                lower.pop()
            lower.append(p)
        for p in reversed(pts):
            while len(upper) >= 2 and self.orient(upper[-2], upper[-1], p) <= 0:
                upper.pop()
            upper.append(p)
        return len(lower) + len(upper) - 2


@dataclass
class SearchResult:
    polygon: UPolygon | None
    exhaustive: bool
    strategy: str
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.polygon is not None

    def describe(self) -> str:
        if self.polygon is not None:
            return f"U-polygon with {len(self.polygon.vertices)} vertices ({self.strategy})"
        if self.exhaustive:
            return "no U-polygon within this patch and vertex bound (not a proof of global absence)"
        return "search budget exhausted without a U-polygon"


def _backtrack(points, U, max_vertices, node_limit):
    geo = _IndexGeometry(points, U)
    T = range(len(U))
    nodes = 0

    def unmet(S, Sset):
        out = []
        for v in S:
            for t in T:
                line = geo.members[t][geo.line_of[t][v]]
                if sum(1 for w in line if w in Sset) < 2:
                    out.append((v, t))
        return out

    def dfs(seed, S, Sset):
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _Budget
        todo = unmet(S, Sset)
        if not todo:
            return list(S) if len(S) >= 3 else None
        if len(S) >= max_vertices:
            return None
        # most constrained obligation first
        best = None
        for v, t in todo:
            line = geo.members[t][geo.line_of[t][v]]
            cands = [w for w in line if w > seed and w not in Sset]
            if not cands:
                return None
            if best is None or len(cands) < len(best):
                best = cands
        for w in best:
            S.append(w)
            Sset.add(w)
            if geo.hull_size(S) == len(S):
                found = dfs(seed, S, Sset)
                if found:
                    return found
            S.pop()
            Sset.discard(w)
        return None

    for seed in range(len(points)):
        found = dfs(seed, [seed], {seed})
        if found:
            return found, nodes
    return None, nodes


def patch_symmetries(points, n):
    """Maps z -> r z and z -> r conj(z), r a 2n-th root of unity in Q(zeta_n), preserving the set."""
    m = n if n % 2 == 0 else 2 * n
    pset = set(points)
    out = []
    for k in range(m):
        r = zeta(m, k)
        for conj in (False, True):
            def g(z, r=r, conj=conj):
                return r * (z.conjugate() if conj else z)
            if all(g(p) in pset for p in points):
                out.append(g)
    return out


def _symmetric(points, U, n, max_vertices):
    G = patch_symmetries(points, n)
    need = max(3, 2 * len(U))
    seen = set()
    for p in points:
        if p in seen:
            continue
        orbit = []
        for g in G:
            q = g(p)
            if q not in orbit:
                orbit.append(q)
        seen.update(orbit)
        if not (need <= len(orbit) <= max_vertices):
            continue
        hull = convex_hull(orbit)
        if len(hull) == len(orbit) and verify_upolygon(hull, U):
            return hull
    return None


def _check_found(verts, U, n):
    """Postconditions on every search success."""
    if not verify_upolygon(verts, U):
        raise ArithmeticError("search returned a polygon that fails verification")
    if n is None:
        return
    if n in MAGIC_TABLE and len(U) > MAGIC_TABLE[n][0]:
        raise ArithmeticError(f"U-polygon with {len(U)} > b_{n} directions")
    fs = forbidden_set(n)
    for combo in itertools.combinations(U, 4):
        _, cr = _arranged_cross_ratio(list(combo))
        if not contains(fs, cr):
            raise ArithmeticError("U-polygon found for directions with an admissible cross ratio")


def search_upolygon(patch, U, max_vertices: int = 32, strategy: str = "auto", node_limit: int | None = 20000):
    """Look for a U-polygon with vertices among the patch points.

    ``backtrack`` seeds each patch point in canonical order as the lowest
    vertex, then repeatedly picks the obligation (vertex, direction)
    with the fewest candidate partners and branches over them, pruning
    anything not in strictly convex position.  ``symmetric`` tests orbits
    of patch points under the rotations and reflections that preserve
    the patch.  ``auto`` runs the backtracking within ``node_limit`` and
    then the orbit test.
    """
    U = list(U)
    if len(U) < 2:
        raise ValueError("U needs at least two directions")
    if max_vertices < 4:
        raise ValueError("max_vertices must be at least 4")
    points = list(patch.points)
    if strategy not in ("auto", "backtrack", "symmetric"):
        raise ValueError(f"unknown strategy {strategy!r}")
    nodes = 0
    exhaustive = False
    # every direction of U is parallel to two edges
    if 2 * len(U) > max_vertices:
        return SearchResult(None, True, "bound", 0)
    if strategy in ("auto", "backtrack"):
        limit = node_limit if strategy == "auto" else None
        try:
            found, nodes = _backtrack(points, U, max_vertices, limit)
            exhaustive = found is None
        except _Budget:
            found, nodes = None, limit
        if found:
            verts = convex_hull([points[i] for i in found])
            _check_found(verts, U, patch.n)
            return SearchResult(UPolygon(verts, U), False, "backtrack", nodes)
        if exhaustive:
            return SearchResult(None, True, "backtrack", nodes)
    if strategy in ("auto", "symmetric") and patch.n is not None:
        verts = _symmetric(points, U, patch.n, max_vertices)
        if verts is not None:
            _check_found(verts, U, patch.n)
            return SearchResult(UPolygon(verts, U), False, "symmetric", nodes)
    return SearchResult(None, False, strategy, nodes)


# counterexamples


def _colour_classes(P: UPolygon):
    verts = [as_point(v) for v in P.vertices]
    k = len(verts)
    if k % 2:
        raise CounterexampleError("odd number of vertices: no alternating colouring")
    for d in P.directions:
        keys = [line_key(v, d) for v in verts]
        for i in range(k):
            partners = [j for j in range(k) if j != i and keys[j] == keys[i]]
            if len(partners) != 1 or (partners[0] - i) % 2 == 0:
                raise CounterexampleError(
                    f"vertex pairing along direction {d!r} does not alternate colours at vertex {i}"
                )
    return verts[0::2], verts[1::2]


def derive_counterexample(P: UPolygon, patch) -> CounterexamplePair:
    """Two distinct convex subsets of the patch with equal X-rays along P.directions."""
    check = verify_upolygon(P.vertices, P.directions)
    if not check:
        raise CounterexampleError(f"not a U-polygon: {check.reason}")
    pts = list(patch.points)
    pset = set(pts)
    if any(as_point(v) not in pset for v in P.vertices):
        raise CounterexampleError("polygon vertices are not patch points")
    black, grey = _colour_classes(P)
    hull = convex_hull(P.vertices)
    interior = [p for p in pts if strictly_inside(p, hull)]
    h1 = convex_hull(black + interior)
    h2 = convex_hull(grey + interior)
    F1 = [p for p in pts if in_hull(p, h1)]
    F2 = [p for p in pts if in_hull(p, h2)]
    for name, F in (("F1", F1), ("F2", F2)):
        if not is_convex_subset(F, patch):
            raise CounterexampleError(f"{name} is not a convex subset of the patch")
    if set(F1) == set(F2):
        raise CounterexampleError("the two sets coincide")
    for d in P.directions:
        a, b = xray(F1, d).lines, xray(F2, d).lines
        if a != b:
            bad = next(k for k in set(a) | set(b) if a.get(k, 0) != b.get(k, 0))
            raise CounterexampleError(f"X-rays differ in direction {d!r} on line {bad!r}")
    return CounterexamplePair(F1, F2, list(P.directions), black, grey, interior)
