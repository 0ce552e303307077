"""Three directions fail in Z[i]: a hexagon gives two sets with equal X-rays.

Run: python demos/square_lattice_counterexample.py [out.svg]
"""

import sys

from cyclotomo.geometry import INF, direction_from_slope
from cyclotomo.modelset import generate_patch, preset_scheme
from cyclotomo.oracle import determination_check
from cyclotomo.render import render_svg
from cyclotomo.upolygon import derive_counterexample, search_upolygon

patch = generate_patch(preset_scheme("square"), 5)
U = [direction_from_slope(s, 4) for s in (0, 1, INF)]

res = search_upolygon(patch, U)
print(res.describe())


def show(points):
    return " ".join(f"({complex(z).real:g},{complex(z).imag:g})" for z in points)


print("vertices:", show(res.polygon.vertices))

# alternate vertices, plus the interior point, form the two sets
pair = derive_counterexample(res.polygon, patch)
print("F1:", show(pair.F1))
print("F2:", show(pair.F2))

# brute force agrees: some pair of convex subsets collides
rep = determination_check(patch, U)
print("oracle:", rep.outcome, "after", rep.subsets_enumerated, "subsets")

# adding slope 5 removes every collision in this patch
U5 = [direction_from_slope(s, 4) for s in (0, 1, 5, INF)]
rep = determination_check(patch, U5)
print("oracle with slope 5 added:", rep.outcome, f"({rep.subsets_enumerated} subsets)")

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(render_svg(patch.points, res.polygon.vertices, pair.black, pair.grey))
