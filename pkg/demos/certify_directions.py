"""Which sets of X-ray directions pin down convex sets?

Run: python demos/certify_directions.py
"""

from cyclotomo.certifier import certify, suggest_directions
from cyclotomo.geometry import INF, direction_from_slope

# In the square lattice, three directions never suffice.
for slopes in [(0, 1, INF), (0, 1, 2, INF), (0, 1, 5, INF)]:
    U = [direction_from_slope(s, 4) for s in slopes]
    cert = certify(4, U)
    line = f"n=4 slopes {slopes}: {cert.verdict.value} ({cert.rule.value})"
    if cert.witness is not None:
        line += f", cross ratio {cert.witness.cross_ratio.to_fraction()}"
    print(line)

# {0, 1, 2, inf} is inconclusive: its cross ratio 2 is one of the forbidden
# values, so the test cannot exclude a polygon.  {0, 1, 5, inf} has cross
# ratio 5/4, which is not forbidden.

# Four directions are enough when chosen well; here is one choice per n.
for n in (3, 4, 5, 8, 12):
    U = suggest_directions(n, 4)
    print(f"n={n:2d}: " + ", ".join(f"{d.angle * 180 / 3.141592653589793:7.3f} deg" for d in U))
