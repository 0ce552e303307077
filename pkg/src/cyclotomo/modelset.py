"""Finite patches of n-cyclotomic model sets.

A point z of Z[zeta_n] belongs to the model set when its star image,
the Galois conjugate zeta_n -> zeta_n^s, lies in the window.  For n = 3
and n = 4 the ring itself is a lattice and no window is used.  Patches
are the model set points in the closed disk |z|^2 <= R^2 around the
origin, enumerated completely from a coefficient box that provably
contains every such point.

Presets (labeled by the tiling whose vertex set they imitate):

    square          n=4   lattice
    triangular      n=3   lattice
    tuebingen       n=5   s=2, regular decagon window, circumradius 1
    ammann-beenker  n=8   s=3, regular octagon window with unit edges
    shield          n=12  s=5, regular dodecagon window, circumradius 1
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import CycNum, embed_order, euler_phi, galois_apply, restrict_order, sign_of_real, zeta
from .geometry import Direction, angle_order, as_point, orientation

__all__ = [
    "Window",
    "CutProjectScheme",
    "ModelSetPatch",
    "PRESETS",
    "preset_scheme",
    "disk_scheme",
    "regular_polygon_window",
    "generate_patch",
    "directions_from_patch",
]


@dataclass(frozen=True)
class Window:
    """Closed window in internal space: convex polygon (ccw) or origin disk."""

    name: str
    vertices: tuple = ()
    radius_squared: Fraction | None = None

    def contains(self, w: CycNum) -> bool:
        if self.radius_squared is not None:
            return sign_of_real(self.radius_squared - w * w.conjugate()) >= 0
        k = len(self.vertices)
        return all(orientation(self.vertices[i], self.vertices[(i + 1) % k], w) >= 0 for i in range(k))

    def circumradius(self) -> float:
        if self.radius_squared is not None:
            return math.sqrt(self.radius_squared)
        return max(abs(complex(v)) for v in self.vertices)

    def to_json(self) -> dict:
        if self.radius_squared is not None:
            r = Fraction(self.radius_squared)
            return {"kind": "disk", "name": self.name, "radius_squared": [str(r.numerator), str(r.denominator)]}
        return {"kind": "polygon", "name": self.name, "vertices": [v.to_json() for v in self.vertices]}


def regular_polygon_window(m: int, n: int, name: str = "", unit_edges: bool = True) -> Window:
    """Origin-centred regular m-gon (m even) with exact vertices in Q(zeta_n).

    With ``unit_edges`` the edges are the unit vectors zeta_m^j; otherwise
    the vertices are the m-th roots of unity (circumradius 1).
    """
    if m % 2:
        raise ValueError("only even polygons have a vertex pair through the centre")
    if unit_edges:
        verts = [CycNum.rational(0, m)]
        for j in range(m - 1):
            verts.append(verts[-1] + zeta(m, j))
        centre = (verts[0] + verts[m // 2]) / 2
        verts = [v - centre for v in verts]
    else:
        verts = [zeta(m, k) for k in range(m)]
    if n % m == 0:
        verts = [embed_order(v, n) for v in verts]
    elif m == 2 * n and n % 2:
        # Q(zeta_2n) = Q(zeta_n) for odd n
        verts = [restrict_order(v, n) for v in verts]
    else:
        raise ValueError(f"a regular {m}-gon window does not live in Q(zeta_{n})")
    return Window(name or f"regular-{m}-gon", tuple(verts))


@dataclass(frozen=True)
class CutProjectScheme:
    n: int
    star_exponent: int = 1
    window: Window | None = None
    is_lattice: bool = False
    name: str = ""
    # lower bound on pairwise distances, checked on every generated patch
    min_distance: float = 0.0

    def __post_init__(self):
        if not self.is_lattice:
            s = self.star_exponent % self.n
            if math.gcd(s, self.n) != 1 or s in (1, self.n - 1):
                raise ValueError(f"star exponent {self.star_exponent} is not a nontrivial conjugation mod {self.n}")
            if self.window is None:
                raise ValueError("a non-lattice scheme needs a window")

    def star(self, z: CycNum) -> CycNum:
        return galois_apply(z, self.star_exponent)

    def accepts(self, z: CycNum) -> bool:
        return self.is_lattice or self.window.contains(self.star(z))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "star_exponent": self.star_exponent,
            "is_lattice": self.is_lattice,
            "window": None if self.window is None else self.window.to_json(),
            "min_distance": self.min_distance,
        }


def _lattice(n, name, dmin):
    return CutProjectScheme(n, 1, None, True, name, dmin)


PRESETS = {
    "square": lambda: _lattice(4, "square", 1.0),
    "triangular": lambda: _lattice(3, "triangular", 1.0),
    "tuebingen": lambda: CutProjectScheme(
        5, 2, regular_polygon_window(10, 5, "decagon", unit_edges=False), False, "tuebingen", 0.6
    ),
    "ammann-beenker": lambda: CutProjectScheme(
        8, 3, regular_polygon_window(8, 8, "octagon"), False, "ammann-beenker", 0.75
    ),
    "shield": lambda: CutProjectScheme(
        12, 5, regular_polygon_window(12, 12, "dodecagon", unit_edges=False), False, "shield", 0.5
    ),
}

_DEFAULT_PRESET = {3: "triangular", 4: "square", 5: "tuebingen", 8: "ammann-beenker", 12: "shield"}
_DEFAULT_STAR = {5: 2, 8: 3, 12: 5}


def preset_scheme(name_or_n) -> CutProjectScheme:
    if isinstance(name_or_n, int):
        if name_or_n not in _DEFAULT_PRESET:
            raise ValueError(f"unsupported n={name_or_n}; presets exist for n in {sorted(_DEFAULT_PRESET)}")
        name_or_n = _DEFAULT_PRESET[name_or_n]
    try:
        return PRESETS[name_or_n]()
    except KeyError:
        raise ValueError(f"unknown preset {name_or_n!r}; choose from {sorted(PRESETS)}") from None


def disk_scheme(n: int, window_radius_squared) -> CutProjectScheme:
    """Model set with an origin-centred disk window of rational radius^2."""
    if n not in _DEFAULT_STAR:
        raise ValueError(f"disk windows need a non-lattice n in {sorted(_DEFAULT_STAR)}")
    r2 = Fraction(window_radius_squared)
    if r2 <= 0:
        raise ValueError("window radius^2 must be positive")
    return CutProjectScheme(n, _DEFAULT_STAR[n], Window(f"disk r2={r2}", (), r2), False, f"disk-{n}", 0.0)


@dataclass
class ModelSetPatch:
    scheme: CutProjectScheme | None
    radius_squared: Fraction | None
    points: tuple
    float_points: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        self.points = tuple(self.points)
        if not self.float_points:
            self.float_points = [(complex(p).real, complex(p).imag) for p in self.points]

    @classmethod
    def from_points(cls, points, n: int | None = None) -> "ModelSetPatch":
        """An explicit finite point set treated as a patch."""
        pts = [as_point(p) for p in points]
        if len(set(pts)) != len(pts):
            raise ValueError("patch points must be distinct")
        scheme = None if n is None else CutProjectScheme(n, 1, None, True, "explicit")
        return cls(scheme, None, tuple(pts))

    @property
    def n(self) -> int | None:
        return None if self.scheme is None else self.scheme.n

    def __len__(self):
        return len(self.points)

    def to_json(self) -> dict:
        r2 = self.radius_squared
        return {
            "scheme": None if self.scheme is None else self.scheme.to_json(),
            "radius_squared": None if r2 is None else [str(r2.numerator), str(r2.denominator)],
            "points": [p.to_json() for p in self.points],
            "float_points": [list(fp) for fp in self.float_points],
        }


def _embedding_matrix(n, s, lattice):
    phi = euler_phi(n)
    cols = []
    for j in range(phi):
        a = 2 * math.pi * j / n
        col = [math.cos(a), math.sin(a)]
        if not lattice:
            b = 2 * math.pi * j * s / n
            col += [math.cos(b), math.sin(b)]
        cols.append(col)
    return np.array(cols).T


def _coefficient_bound(scheme, radius_squared):
    M = _embedding_matrix(scheme.n, scheme.star_exponent, scheme.is_lattice)
    Minv = np.linalg.inv(M)
    rows = np.linalg.norm(Minv, axis=1)
    r2 = float(radius_squared)
    if not scheme.is_lattice:
        r2 += scheme.window.circumradius() ** 2
    # a = Minv y with |y| <= sqrt(r2); inflate for float error
    return int(math.floor(float(rows.max()) * math.sqrt(r2) * (1 + 1e-9) + 1e-9)) + 1


def generate_patch(scheme: CutProjectScheme, radius_squared) -> ModelSetPatch:
    r2 = Fraction(radius_squared)
    if r2 <= 0:
        raise ValueError("radius^2 must be positive")
    if scheme.n not in (3, 4, 5, 8, 12):
        raise ValueError(f"unsupported n={scheme.n}")
    n, phi = scheme.n, euler_phi(scheme.n)
    B = _coefficient_bound(scheme, r2)
    rng = np.arange(-B, B + 1)
    grid = np.array(np.meshgrid(*([rng] * phi), indexing="ij")).reshape(phi, -1).T
    M = _embedding_matrix(n, scheme.star_exponent, scheme.is_lattice)
    y = grid @ M.T
    tol = 1e-9 * (1 + float(r2))
    keep = y[:, 0] ** 2 + y[:, 1] ** 2 <= float(r2) + tol
    if not scheme.is_lattice:
        w = scheme.window
        iy = y[:, 2:4]
        if w.radius_squared is not None:
            keep &= iy[:, 0] ** 2 + iy[:, 1] ** 2 <= float(w.radius_squared) + tol
        else:
            vs = [complex(v) for v in w.vertices]
            for a, b in zip(vs, vs[1:] + vs[:1]):
                cross = (b.real - a.real) * (iy[:, 1] - a.imag) - (b.imag - a.imag) * (iy[:, 0] - a.real)
                keep &= cross >= -tol * (1 + abs(b - a))
    pts = []
    for coeffs in grid[keep]:
        z = CycNum(n, [int(c) for c in coeffs])
        if sign_of_real(r2 - z * z.conjugate()) < 0:
            continue
        if scheme.accepts(z):
            pts.append(z)
    # grid order is lexicographic in the coefficient vector
    patch = ModelSetPatch(scheme, r2, tuple(pts))
    _check_discreteness(patch)
    return patch


def _check_discreteness(patch):
    dmin = patch.scheme.min_distance
    if dmin <= 0 or len(patch.points) < 2:
        return
    fp = np.array(patch.float_points)
    d2 = ((fp[:, None, :] - fp[None, :, :]) ** 2).sum(-1)
    np.fill_diagonal(d2, np.inf)
    if d2.min() < dmin * dmin * (1 - 1e-9):
        raise ArithmeticError(f"patch violates the minimum distance {dmin} of scheme {patch.scheme.name}")


def directions_from_patch(patch: ModelSetPatch, max_count: int | None = None) -> list[Direction]:
    """Pairwise nonparallel directions of patch differences, sorted by angle.

    Each direction keeps the shortest difference vector realising it.
    """
    pts = patch.points
    if len(pts) < 2:
        raise ValueError("need at least two patch points")
    diffs = {}
    for p, q in itertools.combinations(pts, 2):
        d = q - p
        if (d.order, d.num, d.den) in diffs or (d.order, tuple(-c for c in d.num), d.den) in diffs:
            continue
        diffs[(d.order, d.num, d.den)] = d
    by_len = sorted(diffs.values(), key=lambda d: (abs(complex(d)), d.num))
    best = {}
    for d in by_len:
        D = Direction(d)
        if D not in best:
            best[D] = D
    dirs = list(best)
    perm = angle_order([d.slope for d in dirs])
    dirs = [dirs[i] for i in perm]
    return dirs if max_count is None else dirs[:max_count]
