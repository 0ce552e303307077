"""Discrete parallel X-rays of finite point sets.

The X-ray of F in direction u counts the points of F on every line
parallel to u.  Lines are identified by an exact key that does not
depend on which witness vector represents the direction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .exact import CycNum
from .geometry import Direction, as_point, convex_hull, in_hull

__all__ = ["XRayProfile", "line_key", "xray", "xrays_equal", "is_convex_subset"]


def line_key(p, d: Direction) -> CycNum:
    """Exact label of the line through p parallel to d.

    p*conj(v) - conj(p)*v is 2i Im(p conj v), constant along the line;
    dividing by v + conj(v) (or v - conj(v) for vertical v) removes the
    dependence on the length and sign of the witness v.
    """
    p = as_point(p)
    v = d.vector
    raw = p * v.conjugate() - p.conjugate() * v
    return raw * d.line_scale()


@dataclass
class XRayProfile:
    direction: Direction
    lines: dict  # line key -> positive count

    @property
    def total(self) -> int:
        return sum(self.lines.values())

    def __eq__(self, other):
        if not isinstance(other, XRayProfile):
            return NotImplemented
        return self.direction == other.direction and self.lines == other.lines

    def to_json(self) -> dict:
        entries = []
        for key, count in self.lines.items():
            z = complex(key)
            entries.append({"key": key.to_json(), "offset": z.real + z.imag, "count": count})
        entries.sort(key=lambda e: e["offset"])
        return {"direction": self.direction.vector.to_json(), "lines": entries}


def xray(F, d: Direction) -> XRayProfile:
    pts = [as_point(p) for p in F]
    if len(set(pts)) != len(pts):
        raise ValueError("X-rays are defined for sets; duplicate points given")
    return XRayProfile(d, dict(Counter(line_key(p, d) for p in pts)))


def xrays_equal(F, G, U) -> bool:
    """True iff F and G have the same X-ray in every direction of U."""
    F = [as_point(p) for p in F]
    G = [as_point(p) for p in G]
    if len(F) != len(G) and U:
        return False
    return all(xray(F, d).lines == xray(G, d).lines for d in U)


def is_convex_subset(C, patch) -> bool:
    """C = conv(C) intersected with the patch points (boundary included)."""
    pts = patch.points if hasattr(patch, "points") else [as_point(p) for p in patch]
    C = [as_point(p) for p in C]
    members = set(pts)
    if any(c not in members for c in C):
        raise ValueError("C is not contained in the patch")
    if not C:
        return True
    hull = convex_hull(C)
    chosen = set(C)
    return not any(in_hull(p, hull) for p in pts if p not in chosen)
