"""Command line entry point.

Exit codes: 0 success, 1 domain error (JSON error object on stderr),
2 usage error.  Outputs go to --out or stdout and are deterministic.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from . import jsonio
from .certifier import certify, suggest_directions
from .forbidden import forbidden_set
from .modelset import directions_from_patch, disk_scheme, generate_patch, preset_scheme
from .oracle import DEFAULT_MAX_POINTS, determination_check
from .render import render_svg
from .upolygon import derive_counterexample, search_upolygon
from .xray import xray

DOMAIN_ERRORS = (ValueError, LookupError, ArithmeticError, OSError, json.JSONDecodeError, RuntimeError)


class _Run:
    """Collects written outputs and read inputs for the manifest."""

    def __init__(self, args, argv):
        self.args = args
        self.argv = argv
        self.inputs = {}
        self.outputs = {}

    def read_json(self, path):
        data = Path(path).read_bytes()
        self.inputs[str(path)] = hashlib.sha256(data).hexdigest()
        return json.loads(data)

    def write(self, text: str, path=None):
        path = path or self.args.out
        if path in (None, "-"):
            sys.stdout.write(text)
            self.outputs["<stdout>"] = hashlib.sha256(text.encode()).hexdigest()
        else:
            Path(path).write_text(text)
            self.outputs[str(path)] = hashlib.sha256(text.encode()).hexdigest()

    def manifest(self) -> dict:
        return {
            "command": self.argv,
            "inputs": self.inputs,
            "version": __version__,
            "seed": None,
            "outputs": self.outputs,
        }


def _patch(run, path):
    return jsonio.patch_from_json(run.read_json(path))


def _directions(run, args, n=None):
    if getattr(args, "slopes", None):
        from .geometry import direction_from_slope

        return n, [direction_from_slope(jsonio.parse_slope(s), n) for s in args.slopes.split(",")]
    if getattr(args, "directions", None):
        return jsonio.directions_from_json(run.read_json(args.directions), n)
    raise ValueError("give --slopes or --directions")


def cmd_gen(run, args):
    if args.window_disk_r2 is not None:
        scheme = disk_scheme(args.n, jsonio.parse_fraction(args.window_disk_r2))
    else:
        scheme = preset_scheme(args.preset if args.preset else args.n)
        if args.n is not None and scheme.n != args.n:
            raise ValueError(f"preset {scheme.name} is for n={scheme.n}, not {args.n}")
    patch = generate_patch(scheme, jsonio.parse_fraction(args.r2))
    run.write(jsonio.dumps(patch.to_json()))


def cmd_directions(run, args):
    if args.patch:
        patch = _patch(run, args.patch)
        U = directions_from_patch(patch, args.max_count)
        n = patch.n
    else:
        n, U = _directions(run, args, args.n)
    run.write(jsonio.dumps(jsonio.directions_json(U, n)))


def cmd_forbidden(run, args):
    run.write(jsonio.dumps(forbidden_set(args.n).to_json()))


def cmd_certify(run, args):
    _, U = _directions(run, args, args.n)
    run.write(jsonio.dumps(jsonio.certificate_json(certify(args.n, U))))


def cmd_suggest(run, args):
    U = suggest_directions(args.n, args.count, args.norm_bound)
    run.write(jsonio.dumps(jsonio.directions_json(U, args.n)))


def cmd_xray(run, args):
    patch = _patch(run, args.patch)
    F = jsonio.points_from_json(run.read_json(args.subset))
    members = set(patch.points)
    if any(p not in members for p in F):
        raise ValueError("subset is not contained in the patch")
    raw = json.loads(args.direction) if args.direction.lstrip().startswith("{") else args.direction
    d = jsonio.direction_from_json(raw, patch.n)
    prof = xray(F, d).to_json()
    prof["direction"] = jsonio.direction_json(d)
    run.write(jsonio.dumps(prof))


def _search(run, args):
    patch = _patch(run, args.patch)
    _, U = _directions(run, args, patch.n)
    res = search_upolygon(patch, U, args.max_vertices, args.strategy, args.node_limit)
    return patch, U, res


def cmd_find(run, args):
    _, _, res = _search(run, args)
    run.write(jsonio.dumps(jsonio.search_json(res)))


def cmd_counterexample(run, args):
    if args.polygon:
        patch = _patch(run, args.patch)
        P = jsonio.upolygon_from_json(run.read_json(args.polygon))
    else:
        patch, U, res = _search(run, args)
        if res.polygon is None:
            raise LookupError(res.describe())
        P = res.polygon
    pair = derive_counterexample(P, patch)
    out = {"polygon": jsonio.upolygon_json(P), "pair": jsonio.pair_json(pair)}
    run.write(jsonio.dumps(out))
    if args.svg:
        run.write(render_svg(patch.points, P.vertices, pair.black, pair.grey), args.svg)


def cmd_oracle(run, args):
    patch = _patch(run, args.patch)
    _, U = _directions(run, args, patch.n)
    run.write(jsonio.dumps(jsonio.oracle_json(determination_check(patch, U, args.max_points))))


def cmd_render(run, args):
    patch = _patch(run, args.patch)
    poly, black, grey = None, [], []
    if args.input:
        data = run.read_json(args.input)
        if "polygon" in data and data["polygon"] is not None:
            poly = jsonio.upolygon_from_json(data).vertices
        if "pair" in data:
            pair = jsonio.pair_from_json(data)
            black, grey = pair.black, pair.grey
    run.write(render_svg(patch.points, poly, black, grey, args.size))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclotomo", description="Discrete tomography in cyclotomic model sets.")
    ap.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--manifest", help="write a run manifest with input and output digests")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def dirs(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--slopes", help="comma separated slopes, e.g. 0,1,5,inf")
        g.add_argument("--directions", help="directions JSON file")

    p = add("gen", cmd_gen, "generate a model set patch")
    p.add_argument("--n", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--preset")
    g.add_argument("--window-disk-r2", help="disk window radius^2 (rational)")
    p.add_argument("--r2", required=True, help="patch radius^2 (rational)")

    p = add("directions", cmd_directions, "directions of a patch, or a directions file from slopes")
    p.add_argument("--patch")
    p.add_argument("--max-count", type=int)
    p.add_argument("--n", type=int)
    dirs(p)

    p = add("forbidden-set", cmd_forbidden, "forbidden cross ratios for n")
    p.add_argument("--n", type=int, required=True)

    p = add("certify", cmd_certify, "decide determination by X-rays along U")
    p.add_argument("--n", type=int, required=True)
    dirs(p)

    p = add("suggest", cmd_suggest, "directions certified to determine convex sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=4)
    p.add_argument("--norm-bound", type=int, default=2)

    p = add("xray", cmd_xray, "X-ray of a subset in one direction")
    p.add_argument("--patch", required=True)
    p.add_argument("--subset", required=True)
    p.add_argument("--direction", required=True, help="slope such as 1/2 or inf, or a direction JSON object")

    for name, func, help_ in (
        ("find-upolygon", cmd_find, "search a U-polygon in a patch"),
        ("counterexample", cmd_counterexample, "two convex sets with equal X-rays"),
    ):
        p = add(name, func, help_)
        p.add_argument("--patch", required=True)
        dirs(p)
        p.add_argument("--max-vertices", type=int, default=32)
        p.add_argument("--strategy", choices=["auto", "backtrack", "symmetric"], default="auto")
        p.add_argument("--node-limit", type=int, default=20000)
        if name == "counterexample":
            p.add_argument("--polygon", help="use this U-polygon JSON instead of searching")
            p.add_argument("--svg", help="also write an SVG figure")

    p = add("oracle", cmd_oracle, "brute-force determination check")
    p.add_argument("--patch", required=True)
    dirs(p)
    p.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)

    p = add("render", cmd_render, "SVG figure of a patch with optional polygon and colouring")
    p.add_argument("--patch", required=True)
    p.add_argument("--input", help="counterexample or find-upolygon JSON")
    p.add_argument("--size", type=int, default=480)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    run = _Run(args, argv)
    try:
        args.func(run, args)
    except DOMAIN_ERRORS as e:
        err = {"error": type(e).__name__, "message": str(e), "command": args.command}
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 1
    if args.manifest:
        Path(args.manifest).write_text(jsonio.dumps(run.manifest()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
