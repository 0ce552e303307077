"""Tabulate the forbidden cross ratios for the five tabulated n.

Run: python demos/forbidden_values.py
"""

from cyclotomo.forbidden import forbidden_set

for n in (3, 4, 5, 8, 12):
    fs = forbidden_set(n)
    shown = ", ".join(f"{float(v):.4f}" for v in fs.values[:8])
    more = "" if len(fs) <= 8 else f", ... ({len(fs) - 8} more)"
    print(f"n={n:2d}  N={fs.N:2d}  {fs.quadruples_enumerated:5d} quadruples -> {len(fs):2d} values: {shown}{more}")

# The rationals 4/3, 3/2, 2, 3, 4 show up for every n.
