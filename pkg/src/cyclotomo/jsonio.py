"""JSON encodings of the library's objects.

Every number is written exactly (CycNum coefficient form, rationals as
decimal-string pairs) next to a float rendering for people and plots.
Output is deterministic: keys sorted, lists in library order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .exact import CycNum, is_real
from .geometry import INF, Direction, direction_from_slope
from .modelset import CutProjectScheme, ModelSetPatch, PRESETS, Window

__all__ = [
    "dumps",
    "fraction_json",
    "parse_fraction",
    "number_json",
    "slope_json",
    "parse_slope",
    "direction_json",
    "direction_from_json",
    "directions_json",
    "directions_from_json",
    "patch_from_json",
    "points_json",
    "points_from_json",
    "certificate_json",
    "upolygon_json",
    "upolygon_from_json",
    "search_json",
    "pair_json",
    "pair_from_json",
    "oracle_json",
    "load_schema",
    "validate",
    "load_fixture",
]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def fraction_json(q) -> list:
    q = Fraction(q)
    return [str(q.numerator), str(q.denominator)]


def parse_fraction(x) -> Fraction:
    """["num","den"], [num, den], an int, or a string such as "3/2"."""
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise ValueError(f"a rational needs [num, den], got {x!r}")
        return Fraction(int(x[0]), int(x[1]))
    if isinstance(x, float) or not isinstance(x, (int, str, Fraction)):
        raise ValueError(f"rationals must be given exactly, got {x!r}")
    return Fraction(x)


def number_json(z: CycNum) -> dict:
    z = CycNum._coerce(z)
    c = complex(z)
    out = {"exact": z.to_json()}
    if z.is_rational():
        out["rational"] = fraction_json(z.to_fraction())
    out["float"] = c.real if is_real(z) else [c.real, c.imag]
    return out


def slope_json(s):
    if s is INF:
        return "inf"
    return number_json(s)


def parse_slope(text):
    """Slope shorthand: "inf", an integer, or a fraction "p/q"."""
    if isinstance(text, str) and text.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    return parse_fraction(text.strip() if isinstance(text, str) else text)


def direction_json(d: Direction) -> dict:
    return {"vector": d.vector.to_json(), "slope": slope_json(d.slope), "angle": d.angle}


def direction_from_json(obj, n: int | None = None) -> Direction:
    """Accepts {"slope": ...}, {"vector": cyc}, a CycNum object, or integer coefficients."""
    if isinstance(obj, str):
        return direction_from_slope(parse_slope(obj), n)
    if isinstance(obj, list):
        if n is None:
            raise ValueError("integer coefficient vectors need n")
        return Direction(CycNum(n, [int(c) for c in obj]))
    if not isinstance(obj, dict):
        raise ValueError(f"cannot read a direction from {obj!r}")
    # the witness vector is exact for every slope, so it wins over "slope"
    if "vector" in obj:
        return Direction(CycNum.from_json(obj["vector"]))
    if "slope" in obj:
        s = obj["slope"]
        slope = INF if isinstance(s, str) and s.lower() == "inf" else parse_fraction(s)
        return direction_from_slope(slope, n)
    if "order" in obj:
        return Direction(CycNum.from_json(obj))
    if "coeffs" in obj:
        order = obj.get("n", n)
        if order is None:
            raise ValueError("integer coefficient vectors need n")
        return Direction(CycNum(int(order), [int(c) for c in obj["coeffs"]]))
    raise ValueError(f"cannot read a direction from {obj!r}")


def directions_json(U, n: int | None = None) -> dict:
    out = {"directions": [direction_json(d) for d in U]}
    if n is not None:
        out["n"] = n
    return out


def directions_from_json(data, n: int | None = None):
    """Returns (n, directions); n from the file wins only when none is given."""
    if isinstance(data, dict):
        n = n if n is not None else data.get("n")
        items = data["directions"]
    else:
        items = data
    return n, [direction_from_json(x, n) for x in items]


def _window_from_json(data):
    if data is None:
        return None
    if data["kind"] == "disk":
        return Window(data["name"], (), parse_fraction(data["radius_squared"]))
    return Window(data["name"], tuple(CycNum.from_json(v) for v in data["vertices"]))


def patch_from_json(data) -> ModelSetPatch:
    sd = data.get("scheme")
    scheme = None
    if sd is not None:
        if sd.get("name") in PRESETS and PRESETS[sd["name"]]().to_json() == sd:
            scheme = PRESETS[sd["name"]]()
        else:
            scheme = CutProjectScheme(
                int(sd["n"]),
                int(sd["star_exponent"]),
                _window_from_json(sd.get("window")),
                bool(sd["is_lattice"]),
                sd.get("name", ""),
                float(sd.get("min_distance", 0.0)),
            )
    r2 = data.get("radius_squared")
    pts = tuple(CycNum.from_json(p) for p in data["points"])
    if len(set(pts)) != len(pts):
        raise ValueError("patch points must be distinct")
    return ModelSetPatch(scheme, None if r2 is None else parse_fraction(r2), pts)


def points_json(points) -> list:
    out = []
    for p in points:
        c = complex(p)
        out.append({"exact": p.to_json(), "float": [c.real, c.imag]})
    return out


def points_from_json(data) -> list:
    if isinstance(data, dict):
        data = data["points"]
    return [CycNum.from_json(p["exact"] if "exact" in p else p) for p in data]


def certificate_json(cert) -> dict:
    out = {
        "n": cert.n,
        "verdict": cert.verdict.value,
        "rule": cert.rule.value,
        "quadruples_checked": cert.quadruples_checked,
        "directions": [direction_json(d) for d in cert.directions],
        "witness": None,
    }
    if cert.witness is not None:
        w = cert.witness
        out["witness"] = {
            "indices": list(w.indices),
            "directions": [direction_json(d) for d in w.directions],
            "slopes": [slope_json(d.slope) for d in w.directions],
            "cross_ratio": number_json(w.cross_ratio),
        }
    return out


def upolygon_json(P) -> dict:
    return {"vertices": points_json(P.vertices), "directions": [direction_json(d) for d in P.directions]}


def upolygon_from_json(data):
    from .upolygon import UPolygon

    if "polygon" in data:
        data = data["polygon"]
    _, U = directions_from_json(data["directions"])
    return UPolygon(points_from_json(data["vertices"]), U)


def search_json(result) -> dict:
    return {
        "found": result.found,
        "exhaustive": result.exhaustive,
        "strategy": result.strategy,
        "nodes": result.nodes,
        "message": result.describe(),
        "polygon": None if result.polygon is None else upolygon_json(result.polygon),
    }


def pair_json(pair) -> dict:
    return {
        "F1": points_json(pair.F1),
        "F2": points_json(pair.F2),
        "black": points_json(pair.black),
        "grey": points_json(pair.grey),
        "interior": points_json(pair.interior),
        "directions": [direction_json(d) for d in pair.directions],
        "sizes": [len(pair.F1), len(pair.F2)],
    }


def pair_from_json(data):
    from .upolygon import CounterexamplePair

    if "pair" in data:
        data = data["pair"]
    _, U = directions_from_json(data["directions"])
    return CounterexamplePair(
        points_from_json(data["F1"]),
        points_from_json(data["F2"]),
        U,
        points_from_json(data.get("black", [])),
        points_from_json(data.get("grey", [])),
        points_from_json(data.get("interior", [])),
    )


def oracle_json(report) -> dict:
    return {
        "patch": report.patch_summary,
        "directions": [direction_json(d) for d in report.directions],
        "outcome": report.outcome,
        "collision": None if report.collision is None else pair_json(report.collision),
        "subsets_enumerated": report.subsets_enumerated,
        "work_units": report.work_units,
        "note": report.notes,
    }


def load_schema(name: str) -> dict:
    text = resources.files("cyclotomo").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(obj, name: str) -> None:
    """Raise jsonschema.ValidationError if obj does not match the named schema."""
    import jsonschema

    jsonschema.validate(obj, load_schema(name))


def load_fixture(name: str) -> dict:
    """A JSON fixture shipped with the package, e.g. "shield_upolygon"."""
    text = resources.files("cyclotomo").joinpath("fixtures", f"{name}.json").read_text()
    return json.loads(text)
