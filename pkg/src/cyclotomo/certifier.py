"""Decide whether X-rays in a set of directions determine convex subsets.

Verdicts, given n and pairwise nonparallel Lambda-directions U:

* fewer than four directions: a U-polygon always exists, so the convex
  subsets are NOT determined;
* more than b_n directions (tabulated n only): no U-polygon can exist,
  so they are determined;
* a 4-subset whose angle-ordered cross ratio of slopes is outside the
  forbidden set rules out U-polygons: determined, with that 4-subset
  as witness;
* otherwise the test is inconclusive.  Forbidden cross ratios are only a
  necessary condition for a U-polygon.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .exact import CycNum, euler_phi
from .forbidden import contains, forbidden_set
from .geometry import Direction, angle_order, cross_ratio, is_lambda_direction

__all__ = [
    "MAGIC_TABLE",
    "Verdict",
    "Rule",
    "Witness",
    "Certificate",
    "certify",
    "suggest_directions",
    "check_directions",
    "DirectionsNotFound",
]

# n -> (b_n, m_n)
MAGIC_TABLE: dict[int, tuple[int, int]] = {
    3: (6, 7),
    4: (6, 7),
    5: (10, 11),
    8: (8, 9),
    12: (12, 13),
}


class Verdict(str, enum.Enum):
    DETERMINED = "Determined"
    NOT_DETERMINED = "NotDetermined"
    INCONCLUSIVE = "Inconclusive"


class Rule(str, enum.Enum):
    CARDINALITY_BELOW_FOUR = "cardinality-below-four"
    EXCEEDS_BOUND = "exceeds-b_n"
    GOOD_CROSS_RATIO = "good-cross-ratio"
    ALL_FORBIDDEN = "all-quadruples-forbidden"


@dataclass
class Witness:
    directions: list  # arranged by angle
    indices: list  # positions of those directions in the input
    cross_ratio: CycNum


@dataclass
class Certificate:
    n: int
    verdict: Verdict
    rule: Rule
    witness: Witness | None = None
    quadruples_checked: int = 0
    directions: list = field(default_factory=list, repr=False)


class DirectionsNotFound(LookupError):
    def __init__(self, message, searched):
        super().__init__(message)
        self.searched = searched


def check_directions(n: int, U) -> list[Direction]:
    """Validate U for n: Lambda-directions, pairwise nonparallel."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    U = [d if isinstance(d, Direction) else Direction(d) for d in U]
    seen = {}
    for i, d in enumerate(U):
        if not is_lambda_direction(d, n):
            raise ValueError(f"direction {i} is not parallel to an element of Z[zeta_{n}]")
        j = seen.setdefault(d, i)
        if j != i:
            raise ValueError(f"directions {j} and {i} are parallel")
    return U


def _arranged_cross_ratio(dirs):
    slopes = [d.slope for d in dirs]
    perm = angle_order(slopes)
    return perm, cross_ratio(*(slopes[p] for p in perm))


def certify(n: int, U) -> Certificate:
    U = check_directions(n, U)
    k = len(U)
    if k < 4:
        return Certificate(n, Verdict.NOT_DETERMINED, Rule.CARDINALITY_BELOW_FOUR, directions=U)
    if n in MAGIC_TABLE and k > MAGIC_TABLE[n][0]:
        return Certificate(n, Verdict.DETERMINED, Rule.EXCEEDS_BOUND, directions=U)
    fs = forbidden_set(n)
    checked = 0
    for combo in itertools.combinations(range(k), 4):
        checked += 1
        dirs = [U[i] for i in combo]
        perm, cr = _arranged_cross_ratio(dirs)
        if not contains(fs, cr):
            w = Witness([dirs[p] for p in perm], [combo[p] for p in perm], cr)
            return Certificate(n, Verdict.DETERMINED, Rule.GOOD_CROSS_RATIO, w, checked, U)
    return Certificate(n, Verdict.INCONCLUSIVE, Rule.ALL_FORBIDDEN, None, checked, U)


def _candidate_directions(n: int, norm_bound: int):
    """Pairwise nonparallel directions with witnesses in Z[zeta_n].

    Coefficient vectors are visited by max-norm, then in the fixed order
    0, 1, -1, 2, -2, ... with the constant term varying fastest; the first
    witness of each parallel class is kept.
    """
    phi = euler_phi(n)
    seen = set()
    out = []
    searched = 0
    for r in range(1, norm_bound + 1):
        vals = [0] + [s * k for k in range(1, r + 1) for s in (1, -1)]
        for rev in itertools.product(vals, repeat=phi):
            if max(abs(c) for c in rev) != r:
                continue
            searched += 1
            z = CycNum(n, rev[::-1])
            if z.is_zero():
                continue
            d = Direction(z)
            if d not in seen:
                seen.add(d)
                out.append(d)
    return out, searched


def suggest_directions(n: int, count: int, norm_bound: int = 2) -> list[Direction]:
    """A deterministic set of ``count`` directions certified Determined.

    For tabulated n and count > b_n any nonparallel set works.  Otherwise
    4-subsets of the candidates are scanned for a good cross ratio and the
    witness is padded with further candidates.
    """
    if count < 4:
        raise ValueError("at least four directions are needed")
    cands, searched = _candidate_directions(n, norm_bound)
    if len(cands) < count:
        raise DirectionsNotFound(
            f"only {len(cands)} nonparallel directions with coefficients up to {norm_bound}",
            searched,
        )
    if n in MAGIC_TABLE and count > MAGIC_TABLE[n][0]:
        chosen = cands[:count]
    else:
        fs = forbidden_set(n)
        chosen = None
        tried = 0
        for combo in itertools.combinations(range(len(cands)), 4):
            tried += 1
            dirs = [cands[i] for i in combo]
            _, cr = _arranged_cross_ratio(dirs)
            if not contains(fs, cr):
                rest = [d for i, d in enumerate(cands) if i not in combo]
                chosen = dirs + rest[: count - 4]
                break
        if chosen is None:
            raise DirectionsNotFound(
                f"no 4-subset with an admissible cross ratio among {len(cands)} directions",
                tried,
            )
    if certify(n, chosen).verdict is not Verdict.DETERMINED:
        raise RuntimeError("suggested directions failed certification")
    return chosen
