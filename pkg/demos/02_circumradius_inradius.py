"""Smallest covering homothet and largest inscribed homothet.

Both quantities are single linear programs over the vertex data.  The
simplex-in-cube pair reproduces a classical warning: adding the same segment
to both the body and the gauge changes the circumradius from 1/2 to 2/3, so
the circumradius is not invariant under common Minkowski summands.
"""

import numpy as np

from polyradii import (
    BodySpec,
    circumradius,
    inradius,
    make_body,
    member,
    minkowski_sum,
    transform,
)

for dim in (2, 3):
    simplex = make_body(BodySpec("simplex", dim=dim))
    cube = make_body(BodySpec("cube", dim=dim))
    res = circumradius(simplex, cube)
    print(f"d={dim}: R(simplex, cube) = {res.value:.9f} center {res.center}")

    segment = make_body(BodySpec("segment", dim=dim))
    shifted = circumradius(minkowski_sum(simplex, segment), minkowski_sum(cube, segment))
    print(f"      after adding the segment to both sides: {shifted.value:.9f}")

# Inradius: the largest homothet of the triangle inside a box.
triangle = make_body(BodySpec("equilateral_triangle"))
box = make_body(BodySpec("cube", dim=2, scale=3.0))
res = inradius(box, triangle)
print(f"r(box, triangle) = {res.value:.6f} at center {res.center}")

# The witness really fits: every vertex of the scaled translate is a member.
inscribed = transform(triangle, res.value, res.center)
print("witness translate inside the box:",
      all(member(box, v, tol=1e-6) for v in inscribed.vertices))

# Sanity identities: a body has inradius and circumradius one in itself.
print("R(T, T) =", circumradius(triangle, triangle).value,
      " r(T, T) =", inradius(triangle, triangle).value)
