"""Forbidden cross ratios for U-polygons in n-cyclotomic sets.

With N = lcm(2n, 12) and z = zeta_N, the candidate values are

    (1 - z^k1)(1 - z^k2) / ((1 - z^k3)(1 - z^k4))

over all integer quadruples with k3 < k1 <= k2 < k4 <= N - 1 and
k1 + k2 = k3 + k4.  The forbidden set for n keeps those values that lie
in the real subfield of Q(zeta_n).  If four directions of U, arranged by
angle, have a cross ratio of slopes outside this set, there is no
U-polygon.
"""

from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import dataclass, field
from functools import cmp_to_key
from pathlib import Path

from .exact import CycNum, compare_real, embed_order, in_subfield, is_real, restrict_order, zeta

__all__ = [
    "QuadrupleIndex",
    "ForbiddenSet",
    "enumerate_quadruples",
    "quadruple_value",
    "sine_ratio",
    "forbidden_set",
    "contains",
    "CACHE_ENV",
]

CACHE_ENV = "CYCLOTOMO_CACHE_DIR"


@dataclass(frozen=True, order=True)
class QuadrupleIndex:
    k1: int
    k2: int
    k3: int
    k4: int
    N: int

    def __post_init__(self):
        k1, k2, k3, k4, N = self.k1, self.k2, self.k3, self.k4, self.N
        if not (1 <= k3 < k1 <= k2 < k4 <= N - 1 and k1 + k2 == k3 + k4):
            raise ValueError(f"invalid quadruple {(k1, k2, k3, k4)} for N={N}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.k1, self.k2, self.k3, self.k4)


def enumerate_quadruples(N: int):
    """All admissible quadruples for N, ordered by (k3, k1, k2)."""
    for k3 in range(1, N):
        for k1 in range(k3 + 1, N):
            for k2 in range(k1, N):
                k4 = k1 + k2 - k3
                if k4 > N - 1:
                    break
                yield QuadrupleIndex(k1, k2, k3, k4, N)


class _Factors:
    def __init__(self, N):
        self.N = N
        self.one_minus = [None] + [1 - zeta(N, k) for k in range(1, N)]
        self.inverse = [None] + [f.inverse() for f in self.one_minus[1:]]

    def value(self, q):
        return (
            self.one_minus[q.k1] * self.one_minus[q.k2] * self.inverse[q.k3] * self.inverse[q.k4]
        )


def quadruple_value(q: QuadrupleIndex) -> CycNum:
    z1, z2, z3, z4 = (1 - zeta(q.N, k) for k in q.as_tuple())
    return z1 * z2 / (z3 * z4)


def sine_ratio(q: QuadrupleIndex) -> float:
    """Float value via sin(pi k1/N) sin(pi k2/N) / (sin(pi k3/N) sin(pi k4/N))."""
    s = [math.sin(math.pi * k / q.N) for k in q.as_tuple()]
    return s[0] * s[1] / (s[2] * s[3])


@dataclass
class ForbiddenSet:
    n: int
    N: int
    values: tuple
    provenance: dict = field(repr=False)
    quadruples_enumerated: int = 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, v):
        return contains(self, v)

    def to_json(self) -> dict:
        out = []
        for v in self.values:
            entry = {
                "value": v.to_json(),
                "float": float(v),
                "quadruples": [list(q.as_tuple()) for q in self.provenance[v]],
            }
            if v.is_rational():
                entry["rational"] = str(v.to_fraction())
            out.append(entry)
        return {
            "n": self.n,
            "N": self.N,
            "count": len(self.values),
            "quadruples_enumerated": self.quadruples_enumerated,
            "values": out,
        }

    @classmethod
    def from_json(cls, data) -> "ForbiddenSet":
        n, N = int(data["n"]), int(data["N"])
        values, prov = [], {}
        for entry in data["values"]:
            v = CycNum.from_json(entry["value"])
            values.append(v)
            prov[v] = [QuadrupleIndex(*q, N) for q in entry["quadruples"]]
        return cls(n, N, tuple(values), prov, int(data.get("quadruples_enumerated", 0)))


def _compute(n: int) -> ForbiddenSet:
    N = math.lcm(2 * n, 12)
    factors = _Factors(N)
    found: dict[tuple, CycNum] = {}
    prov: dict[tuple, list] = {}
    count = 0
    for q in enumerate_quadruples(N):
        count += 1
        v = factors.value(q)
        key = (v.num, v.den)
        if key in prov:
            # None marks a value already rejected by the subfield test
            if prov[key] is not None:
                prov[key].append(q)
            continue
        if not is_real(v):
            raise ArithmeticError(f"quadruple {q} produced a non-real value")
        if in_subfield(v, n):
            found[key] = v
            prov[key] = [q]
        else:
            prov[key] = None
    keys = [k for k in found]
    keys.sort(key=cmp_to_key(lambda a, b: compare_real(found[a], found[b])))
    values = tuple(found[k] for k in keys)
    provenance = {found[k]: prov[k] for k in keys}
    return ForbiddenSet(n, N, values, provenance, count)


_memo: dict[int, ForbiddenSet] = {}
_memo_lock = threading.Lock()


def forbidden_set(n: int, cache_dir: str | os.PathLike | None = None) -> ForbiddenSet:
    """The forbidden cross-ratio set for n >= 3.

    Results are memoized in process and, when ``cache_dir`` or the
    CYCLOTOMO_CACHE_DIR environment variable is set, stored as JSON keyed
    by n.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    with _memo_lock:
        if n in _memo:
            return _memo[n]
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    path = Path(cache_dir) / f"forbidden_n{n}.json" if cache_dir else None
    fs = None
    if path is not None and path.exists():
        loaded = ForbiddenSet.from_json(json.loads(path.read_text()))
        if loaded.n == n and loaded.N == math.lcm(2 * n, 12):
            fs = loaded
    if fs is None:
        fs = _compute(n)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(fs.to_json(), sort_keys=True, indent=1))
    with _memo_lock:
        _memo.setdefault(n, fs)
        return _memo[n]


def contains(fs: ForbiddenSet, v) -> bool:
    """Exact membership of a real number in ``fs``."""
    v = CycNum._coerce(v)
    if not is_real(v):
        raise ValueError("membership is only defined for real numbers")
    M = math.lcm(v.order, fs.N)
    if M != fs.N:
        v = embed_order(v, M)
        if not in_subfield(v, fs.N):
            return False
        v = restrict_order(v, fs.N)
    else:
        v = embed_order(v, fs.N)
    return v in fs.provenance
