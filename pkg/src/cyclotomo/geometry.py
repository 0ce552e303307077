"""Directions, slopes, cross ratios and exact planar predicates.

Points of the plane are complex numbers, here cyclotomic numbers.  A
direction is stored through a nonzero witness vector; directions are
taken modulo sign, so two of them are parallel exactly when their slopes
agree.  Slopes are real cyclotomic numbers or the symbol ``INF``.

All predicates are exact.  Orientation and coordinate comparisons run a
floating point filter with a conservative error bound first and fall
back to exact sign determination when the filter cannot decide.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cmp_to_key

from .exact import CycNum, Sign, embed_order, in_subfield, restrict_order, sign_of_real, zeta

__all__ = [
    "INF",
    "Direction",
    "slope_of",
    "angle_order",
    "cross_ratio",
    "orientation",
    "convex_hull",
    "in_hull",
    "strictly_inside",
    "real_part",
    "imag_part",
    "is_lambda_direction",
    "direction_from_slope",
    "as_point",
]


class _Infinity:
    """The slope of vertical directions."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def as_point(z) -> CycNum:
    if isinstance(z, CycNum):
        return z
    if isinstance(z, (int, Fraction)):
        return CycNum.rational(z)
    raise TypeError(f"cannot interpret {z!r} as a point")


def real_part(z: CycNum) -> CycNum:
    return (z + z.conjugate()) / 2


def imag_part(z: CycNum) -> CycNum:
    """Im z as a real element of Q(zeta_lcm(N, 4))."""
    i = zeta(4)
    return (z - z.conjugate()) * (-i) / 2


def _sign_imag(w: CycNum) -> Sign:
    re, im, err = w._float_parts()
    if abs(im) > err:
        return Sign.POSITIVE if im > 0 else Sign.NEGATIVE
    if w.conjugate() == w:
        return Sign.ZERO
    return sign_of_real(imag_part(w))


def _sign_real(w: CycNum) -> Sign:
    re, im, err = w._float_parts()
    if abs(re) > err:
        return Sign.POSITIVE if re > 0 else Sign.NEGATIVE
    return sign_of_real(real_part(w))


def slope_of(z) -> "CycNum | _Infinity":
    """sl(z) = -i (z - conj z) / (z + conj z), or INF when z is vertical."""
    if isinstance(z, Direction):
        return z.slope
    z = as_point(z)
    if z.is_zero():
        raise ValueError("slope of the zero vector")
    s = z + z.conjugate()
    if s.is_zero():
        return INF
    return (z - z.conjugate()) * (-zeta(4)) / s


class Direction:
    """A direction modulo sign, given by a nonzero witness vector."""

    __slots__ = ("vector", "_slope", "_scale", "_angle")

    def __init__(self, vector):
        vector = as_point(vector)
        if vector.is_zero():
            raise ValueError("a direction needs a nonzero vector")
        self.vector = vector
        self._slope = None
        self._scale = None
        self._angle = None

    @classmethod
    def from_slope(cls, slope, n: int | None = None) -> "Direction":
        return direction_from_slope(slope, n)

    @property
    def slope(self):
        if self._slope is None:
            self._slope = slope_of(self.vector)
        return self._slope

    @property
    def angle(self) -> float:
        """Float angle in [0, pi), for display and sorting hints only."""
        if self._angle is None:
            z = complex(self.vector)
            a = math.atan2(z.imag, z.real) % math.pi
            self._angle = 0.0 if a >= math.pi else a
        return self._angle

    def line_scale(self) -> CycNum:
        """1/(v + conj v), or 1/(v - conj v) for vertical v."""
        if self._scale is None:
            v = self.vector
            s = v + v.conjugate()
            if s.is_zero():
                s = v - v.conjugate()
            self._scale = s.inverse()
        return self._scale

    def is_parallel(self, other: "Direction") -> bool:
        return self.slope == other.slope

    def __eq__(self, other):
        if not isinstance(other, Direction):
            return NotImplemented
        return self.is_parallel(other)

    def __hash__(self):
        return hash(self.slope)

    def __repr__(self):
        return f"Direction({self.vector!r})"


def is_lambda_direction(d: Direction, n: int) -> bool:
    """True iff ``d`` is parallel to a nonzero element of Q(zeta_n)."""
    v = d.vector
    q = v / v.conjugate()
    m = math.lcm(q.order, n)
    return in_subfield(embed_order(q, m), n)


def direction_from_slope(slope, n: int | None = None) -> Direction:
    """Direction with the given slope.

    Without ``n`` the witness is 1 + slope*i (or i).  With ``n`` the
    witness is chosen inside Z[zeta_n]; ValueError if no such witness
    exists.
    """
    i = zeta(4)
    if slope is INF or (isinstance(slope, str) and slope.lower() in ("inf", "infinity")):
        slope = INF
    elif not isinstance(slope, CycNum):
        slope = CycNum.rational(Fraction(slope))
    if n is None:
        return Direction(i if slope is INF else 1 + slope * i)
    # q = exp(2 i theta); then x + q conj(x) is parallel to the direction
    q = CycNum.rational(-1) if slope is INF else (1 + slope * i) / (1 - slope * i)
    m = math.lcm(q.order, n)
    q = embed_order(q, m)
    if not in_subfield(q, n):
        raise ValueError(f"slope {slope!r} is not realised by a Z[zeta_{n}]-direction")
    q = restrict_order(q, n)
    for x in (CycNum.rational(1, n), zeta(n)):
        w = x + q * x.conjugate()
        if not w.is_zero():
            break
    # clear denominators and content: positive scaling keeps the direction
    g = math.gcd(*w.num)
    return Direction(CycNum(w.order, tuple(c // g for c in w.num), 1, _normalized=True))


# ordering and cross ratios


def _slope_group(t):
    if t is INF:
        return 1
    return 0 if sign_of_real(t) >= 0 else 2


def _compare_slopes(s, t):
    gs, gt = _slope_group(s), _slope_group(t)
    if gs != gt:
        return -1 if gs < gt else 1
    if gs == 1:
        return 0
    return int(sign_of_real(s - t))


def angle_order(slopes) -> list[int]:
    """Permutation sorting slopes by angle in [0, pi).

    Nonnegative slopes ascending, then INF, then negative slopes ascending.
    """
    slopes = [INF if t is INF else CycNum._coerce(t) for t in slopes]
    perm = sorted(range(len(slopes)), key=cmp_to_key(lambda a, b: _compare_slopes(slopes[a], slopes[b])))
    for a, b in zip(perm, perm[1:]):
        if _compare_slopes(slopes[a], slopes[b]) == 0:
            raise ValueError("slopes must be pairwise distinct")
    return perm


def cross_ratio(t1, t2, t3, t4) -> CycNum:
    """<t1,t2,t3,t4> = (t3-t1)(t4-t2) / ((t3-t2)(t4-t1)).

    A slope equal to INF cancels the two factors it appears in.
    """
    ts = [INF if t is INF else CycNum._coerce(t) for t in (t1, t2, t3, t4)]
    finite = [t for t in ts if t is not INF]
    if len(finite) < 3 or len(set(finite)) != len(finite):
        raise ValueError("cross ratio needs four distinct slopes")
    t1, t2, t3, t4 = ts
    if t1 is INF:
        return (t4 - t2) / (t3 - t2)
    if t2 is INF:
        return (t3 - t1) / (t4 - t1)
    if t3 is INF:
        return (t4 - t2) / (t4 - t1)
    if t4 is INF:
        return (t3 - t1) / (t3 - t2)
    return (t3 - t1) * (t4 - t2) / ((t3 - t2) * (t4 - t1))


# planar predicates


def orientation(p, q, r) -> Sign:
    """Sign of the signed area of (p, q, r); positive is counterclockwise."""
    p, q, r = as_point(p), as_point(q), as_point(r)
    px, py, pe = p._float_parts()
    qx, qy, qe = q._float_parts()
    rx, ry, re_ = r._float_parts()
    ax, ay, ea = qx - px, qy - py, pe + qe
    bx, by, eb = rx - px, ry - py, pe + re_
    det = ax * by - ay * bx
    # first-order error of ax*by - ay*bx when every coordinate of a (b) is off by ea (eb)
    bound = 2 * (ea * (abs(bx) + abs(by) + eb) + eb * (abs(ax) + abs(ay) + ea)) + 4e-16 * (abs(ax * by) + abs(ay * bx))
    if abs(det) > bound:
        return Sign.POSITIVE if det > 0 else Sign.NEGATIVE
    w = (q - p).conjugate() * (r - p)
    return _sign_imag(w)


def _compare_xy(p, q):
    d = q - p
    s = _sign_real(d)
    if s:
        return -int(s)
    return -int(_sign_imag(d))


def convex_hull(points) -> list[CycNum]:
    """Convex hull vertices counterclockwise, starting at the lowest (x, y).

    Points on hull edges that are not vertices are dropped.
    """
    pts = []
    seen = set()
    for p in points:
        p = as_point(p)
        if p not in seen:
            seen.add(p)
            pts.append(p)
    pts.sort(key=cmp_to_key(_compare_xy))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _on_segment(p, a, b):
    if orientation(a, b, p) != 0:
        return False
    # (p - a) . (p - b) <= 0
    w = (p - a) * (p - b).conjugate()
    return _sign_real(w) <= 0


def in_hull(p, hull) -> bool:
    """Closed containment in a polygon produced by convex_hull."""
    p = as_point(p)
    if not hull:
        return False
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        return _on_segment(p, hull[0], hull[1])
    k = len(hull)
    return all(orientation(hull[i], hull[(i + 1) % k], p) >= 0 for i in range(k))


def strictly_inside(p, hull) -> bool:
    """Open containment; only meaningful for hulls with three or more vertices."""
    p = as_point(p)
    k = len(hull)
    if k < 3:
        return False
    return all(orientation(hull[i], hull[(i + 1) % k], p) > 0 for i in range(k))
