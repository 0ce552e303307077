"""A polygon in a twelvefold model set that defeats 12 X-ray directions.

The twelve directions at multiples of 15 degrees have every cross ratio
in the forbidden set, so the certifier cannot decide them.  A search in a
shield-type patch finds a 24-gon whose alternate vertices give two convex
sets with the same X-rays in all twelve directions.

Run: python demos/twelvefold_polygon.py [out.svg]
"""

import sys

from cyclotomo.certifier import certify
from cyclotomo.exact import zeta
from cyclotomo.geometry import Direction
from cyclotomo.modelset import generate_patch, preset_scheme
from cyclotomo.render import render_svg
from cyclotomo.upolygon import derive_counterexample, search_upolygon
from cyclotomo.xray import xrays_equal

U = [Direction(zeta(12, k // 2) if k % 2 == 0 else zeta(12, k // 2) + zeta(12, k // 2 + 1)) for k in range(12)]
cert = certify(12, U)
print(f"certifier: {cert.verdict.value} after {cert.quadruples_checked} quadruples")

patch = generate_patch(preset_scheme("shield"), 25)
print(f"patch: {len(patch)} points")

res = search_upolygon(patch, U)
print(res.describe(), f"after {res.nodes} search nodes")

pair = derive_counterexample(res.polygon, patch)
print(f"|F1| = {len(pair.F1)}, |F2| = {len(pair.F2)}, interior points shared: {len(pair.interior)}")
print("equal X-rays in all 12 directions:", xrays_equal(pair.F1, pair.F2, U))

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(render_svg(patch.points, res.polygon.vertices, pair.black, pair.grey))
    print("wrote", sys.argv[1])
