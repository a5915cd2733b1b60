"""Exact axis geometry on the modular surface, rendered to SVG.

Computes endpoints and translation lengths of standard-form axes, tests the
exceptional order-2 cone-point incidence at trace +-3, and writes the two
reference figures (m = 3 and m = 4) next to this script.
"""

import os

from solvsplit import (
    IntMatrix2,
    alpha_arc,
    axis,
    axis_order2_points,
    format_matrix,
    hits_order2_cone,
    in_fundamental_domain,
    render_figure,
)

print("axes of standard forms")
for m in (3, 4, 5, 7):
    L = IntMatrix2(m, -1, 1, 0)
    geo = axis(L)
    lo, hi = geo.endpoints
    print(f"  m = {m}: endpoints {lo} and {hi}")
    print(f"         center {geo.center}, radius^2 {geo.radius_sq}, "
          f"length {geo.translation_length:.12f}")
print()

print("fundamental-domain membership of marked points")
for label, point in (("i", (0, 1)), ("1 + i", (1, 1)), ("2i", (0, 2))):
    print(f"  {label}: {in_fundamental_domain(point)}")
print()

print("the fundamental arc alpha between C_0 and C_m")
for m in (3, 4, 5):
    arc = alpha_arc(m)
    x, y = arc.endpoint_c0
    note = " (exactly the corner of D)" if arc.corner_coincidence else ""
    print(f"  m = {m}: C_0 endpoint x = {x}, y = {y}; "
          f"{arc.c0_endpoint_position} of D ∩ C_0{note}")
print()

print("order-2 cone point incidence")
for L in (IntMatrix2(3, -1, 1, 0), IntMatrix2(4, -1, 1, 0), IntMatrix2(2, 1, 1, 1)):
    hit = hits_order2_cone(L)
    print(f"  {format_matrix(L)}: {'hits' if hit else 'misses'} the cone point")
print(f"  integer points on the m = 3 axis: n + i for n in {axis_order2_points(3)}")
print()

out_dir = os.path.dirname(os.path.abspath(__file__))
for m in (3, 4):
    path = os.path.join(out_dir, f"axis_m{m}.svg")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_figure(m))
    print(f"wrote {path}")
