"""Tour of the functional toolbox on an equilateral triangle.

The triangle conv{(2,0), (-1,±sqrt(3))} has its centroid at the origin but is
not centered, so its gauge (Minkowski functional) is a genuinely asymmetric
distance: reaching the right boundary costs half as much as the left.
"""

import numpy as np

from polyradii import (
    BodySpec,
    GaugeBody,
    gauge,
    make_body,
    max_chord,
    polar,
    radius_fn,
    support,
    supporting_hyperplane_distance,
    width_fn,
)

triangle = make_body(BodySpec("equilateral_triangle"))
print("triangle vertices:\n", triangle.vertices)

for direction in ([1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]):
    h = support(triangle, direction)
    w = width_fn(triangle, direction)
    print(f"direction {direction}: support {h.value:.6f} at vertex {h.witness},"
          f" width {w.value:.6f}")

# The gauge needs the origin in the interior; for this triangle it is.
body = GaugeBody.from_polytope(triangle)
for point in ([2.0, 0.0], [-2.0, 0.0], [0.0, 0.5]):
    g = gauge(body, point)
    print(f"gauge of {point} = {g.value:.6f} (ray exits the body at {g.witness})")

# Radius function: boundary distance along a ray, the reciprocal gauge.
u = np.array([1.0, 0.0])
print("radius along +e1:", radius_fn(body, u).value,
      " along -e1:", radius_fn(body, -u).value)

# Longest chord in a direction; for this triangle the horizontal chord runs
# from the left edge to the right vertex.
print("max chord along e1:", max_chord(triangle, u).value)

# Distances from the origin to the two supporting lines orthogonal to e1.
dist = supporting_hyperplane_distance(triangle, u)
print(f"support {dist.support}, origin distance {dist.origin_distance},"
      f" slab width {dist.width_distance}")

# The polar body: one halfspace per vertex.
h = polar(triangle)
print("polar halfspaces (normal, offset):")
for normal, offset in zip(h.normals, h.offsets):
    print("  ", normal, offset)
