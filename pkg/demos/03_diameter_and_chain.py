"""The diameter in a non-centered gauge and the chain of representations.

With a non-centered gauge body there are several inequivalent ways to turn
"farthest pair of points" into a number.  Five natural candidates form a
chain: the first three always agree, the last two can be strictly larger,
and everything collapses to one number once the gauge is centered.  The
square-against-triangle pair realises the strict case with closed-form
values (2/3)(3+sqrt(3)) < 2 + 4/sqrt(3) < 3 + sqrt(3).
"""

import math

import numpy as np

from polyradii import (
    BodySpec,
    VPolytope,
    circumradius,
    diameter,
    difference_hull,
    induced_norm,
    make_body,
    verify_chain,
)

triangle = make_body(BodySpec("equilateral_triangle"))
square = make_body(BodySpec("centered_square"))

res = diameter(square, triangle)
i, j = res.pair
print(f"D(square, triangle) = {res.value:.9f}")
print(f"attained by vertices {square.vertices[i]} and {square.vertices[j]}")
print(f"closed form (2/3)(3+sqrt 3)  = {(2/3)*(3+math.sqrt(3)):.9f}")

report = verify_chain(square, triangle, tol=1e-7)
print("\nchain members:")
for name in ("a1", "a2", "a3", "a4", "a5"):
    print(f"  {name} = {getattr(report, name):.9f}")
print("flags:", report.flags)
print("chain verified:", report.ok)

# The same chain for a centered gauge collapses to a single value.
hexagon = difference_hull(triangle)  # centered by construction
collapsed = verify_chain(square, hexagon, tol=1e-6)
values = [collapsed.a1, collapsed.a2, collapsed.a3, collapsed.a4, collapsed.a5]
print("\ncentered gauge spread:", max(values) - min(values))

# The diameter is the norm whose unit ball is (C-C)/2, evaluated pairwise.
x = np.array([1.0, 1.0])
print("\ninduced norm of (1,1):", induced_norm(triangle, x).value)
print("2 R({0, x}, triangle) :",
      2 * circumradius(VPolytope([[0.0, 0.0], x]), triangle).value)
