import json
import math

import numpy as np
import pytest
from scipy.optimize import linprog

from polyradii import convex_core as core
from polyradii.convex_core import (
    DimensionMismatchError,
    HPolytope,
    LowerDimensionalError,
    VPolytope,
    difference_body,
    difference_hull,
    facets_2d,
    hull_2d,
    interior_point,
    member,
    minkowski_hull_2d,
    minkowski_sum,
    transform,
)
from polyradii.functionals import support

SQRT3 = math.sqrt(3.0)
TRIANGLE = VPolytope([[2.0, 0.0], [-1.0, SQRT3], [-1.0, -SQRT3]])
SQUARE = VPolytope([[-1.0, -1.0], [-1.0, 1.0], [1.0, -1.0], [1.0, 1.0]])
HEXAGON = np.array(
    [
        [3.0, SQRT3],
        [0.0, 2.0 * SQRT3],
        [-3.0, SQRT3],
        [-3.0, -SQRT3],
        [0.0, -2.0 * SQRT3],
        [3.0, -SQRT3],
    ]
)


def sorted_rows(a):
    a = np.asarray(a, dtype=float)
    return a[np.lexsort((a[:, 1], a[:, 0]))]


def scipy_extreme_points(points):
    """Brute-force extreme-point filter: p is extreme iff p not in conv(rest)."""
    points = np.asarray(points, dtype=float)
    keep = []
    for i, p in enumerate(points):
        rest = np.delete(points, i, axis=0)
        n = rest.shape[0]
        a_eq = np.vstack([rest.T, np.ones(n)])
        b_eq = np.concatenate([p, [1.0]])
        res = linprog(np.zeros(n), A_eq=a_eq, b_eq=b_eq, bounds=[(0, None)] * n)
        if res.status != 0:
            keep.append(p)
    return np.array(keep)


def random_polytope(rng, dim, max_vertices=8):
    n = int(rng.integers(dim + 1, max_vertices + 1))
    return VPolytope(rng.normal(scale=2.0, size=(n, dim)))


def sample_directions(rng, dim, count):
    u = rng.normal(size=(count, dim))
    return u / np.linalg.norm(u, axis=1, keepdims=True)


# ---------------------------------------------------------------------------
# minkowski_sum


def test_sum_with_origin_is_identity():
    origin = VPolytope([[0.0, 0.0]])
    out = minkowski_sum(origin, SQUARE)
    assert np.allclose(sorted_rows(hull_2d(out.vertices).vertices),
                       sorted_rows(SQUARE.vertices))


def test_sum_of_axis_segments_is_unit_square():
    sx = VPolytope([[0.0, 0.0], [1.0, 0.0]])
    sy = VPolytope([[0.0, 0.0], [0.0, 1.0]])
    out = hull_2d(minkowski_sum(sx, sy).vertices)
    expected = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    assert np.allclose(sorted_rows(out.vertices), sorted_rows(expected))


def test_triangle_difference_is_hexagon():
    reflected = transform(TRIANGLE, 1.0, [0.0, 0.0], reflect=True)
    summed = minkowski_sum(TRIANGLE, reflected)
    assert len(summed) == 9
    hull = hull_2d(summed.vertices)
    assert np.allclose(sorted_rows(hull.vertices), sorted_rows(HEXAGON), atol=1e-12)
    # Independent oracle: extreme-point filter over the 9 differences.
    oracle = scipy_extreme_points(summed.vertices)
    assert np.allclose(sorted_rows(oracle), sorted_rows(HEXAGON), atol=1e-9)


def test_sum_rejects_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        minkowski_sum(SQUARE, VPolytope([[0.0, 0.0, 0.0]]))


def test_support_additivity_under_sum():
    rng = np.random.default_rng(101)
    for _ in range(20):
        dim = int(rng.integers(2, 4))
        p = random_polytope(rng, dim)
        q = random_polytope(rng, dim)
        s = minkowski_sum(p, q)
        for u in sample_directions(rng, dim, 100):
            left = support(s, u).value
            right = support(p, u).value + support(q, u).value
            assert abs(left - right) <= 1e-9


def test_cancellation_rule_via_support_dominance():
    rng = np.random.default_rng(202)
    for _ in range(20):
        dim = int(rng.integers(2, 4))
        big = random_polytope(rng, dim)
        take = rng.choice(len(big), size=int(rng.integers(1, len(big) + 1)), replace=False)
        small = VPolytope(big.vertices[take])
        q = random_polytope(rng, dim)
        dirs = sample_directions(rng, dim, 60)
        sum_small = minkowski_sum(small, q)
        sum_big = minkowski_sum(big, q)
        for u in dirs:
            # Inclusion transfers through the sum...
            assert support(sum_small, u).value <= support(sum_big, u).value + 1e-9
            # ...and cancels back out after subtracting the summand's support.
            lhs = support(sum_small, u).value - support(q, u).value
            assert lhs <= support(big, u).value + 1e-9


# ---------------------------------------------------------------------------
# transform / difference_body


def test_transform_examples():
    scaled = transform(SQUARE, 2.0, [0.0, 0.0])
    assert np.allclose(sorted_rows(scaled.vertices), sorted_rows(2.0 * SQUARE.vertices))
    reflected = transform(TRIANGLE, 1.0, [0.0, 0.0], reflect=True)
    expected = np.array([[-2.0, 0.0], [1.0, -SQRT3], [1.0, SQRT3]])
    assert np.allclose(sorted_rows(reflected.vertices), sorted_rows(expected))
    same = transform(TRIANGLE, 1.0, [0.0, 0.0])
    assert np.array_equal(same.vertices, TRIANGLE.vertices)


def test_transform_rejects_bad_scale():
    with pytest.raises(ValueError):
        transform(SQUARE, 0.0, [0.0, 0.0])
    with pytest.raises(ValueError):
        transform(SQUARE, -1.0, [0.0, 0.0])


def test_difference_body_of_singleton_is_origin():
    p = VPolytope([[3.0, -2.0]])
    out = difference_body(p)
    assert np.allclose(out.vertices, [[0.0, 0.0]])


def test_difference_body_of_centered_square_doubles_support():
    d = difference_body(SQUARE)
    rng = np.random.default_rng(5)
    for u in sample_directions(rng, 2, 50):
        assert support(d, u).value == pytest.approx(2.0 * support(SQUARE, u).value, abs=1e-9)


def test_difference_body_is_centered():
    rng = np.random.default_rng(6)
    for _ in range(10):
        dim = int(rng.integers(2, 4))
        d = difference_body(random_polytope(rng, dim))
        for u in sample_directions(rng, dim, 40):
            assert support(d, u).value == pytest.approx(support(d, -u).value, abs=1e-9)


# ---------------------------------------------------------------------------
# hull_2d


def test_hull_drops_interior_and_collinear_points():
    pts = np.vstack([SQUARE.vertices, [[0.0, 0.0]]])
    hull = hull_2d(pts)
    assert len(hull) == 4
    assert np.allclose(sorted_rows(hull.vertices), sorted_rows(SQUARE.vertices))
    collinear = [[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]]
    assert np.allclose(hull_2d(collinear).vertices, [[0.0, 0.0], [2.0, 2.0]])


def test_hull_order_is_ccw_from_lexicographic_minimum():
    hull = hull_2d(SQUARE.vertices).vertices
    assert np.allclose(hull[0], [-1.0, -1.0])
    area2 = 0.0
    for i in range(len(hull)):
        a, b = hull[i], hull[(i + 1) % len(hull)]
        area2 += a[0] * b[1] - a[1] * b[0]
    assert area2 > 0  # counter-clockwise


def test_hull_idempotent_and_permutation_invariant():
    rng = np.random.default_rng(77)
    for _ in range(20):
        pts = rng.normal(size=(int(rng.integers(3, 30)), 2))
        hull = hull_2d(pts)
        again = hull_2d(hull.vertices)
        assert np.array_equal(hull.vertices, again.vertices)
        shuffled = pts[rng.permutation(len(pts))]
        assert np.array_equal(hull_2d(shuffled).vertices, hull.vertices)


def test_hull_rejects_empty_input():
    with pytest.raises(ValueError):
        hull_2d(np.empty((0, 2)))


def test_minkowski_hull_matches_brute_force():
    rng = np.random.default_rng(88)
    for _ in range(30):
        p = random_polytope(rng, 2, max_vertices=7)
        q = random_polytope(rng, 2, max_vertices=7)
        fast = minkowski_hull_2d(p, q)
        brute = hull_2d(minkowski_sum(p, q).vertices)
        assert np.allclose(fast.vertices, brute.vertices, atol=1e-9)
    # Degenerate operands: point and segment.
    seg = VPolytope([[0.0, 0.0], [1.0, 0.0]])
    pt = VPolytope([[2.0, 3.0]])
    assert np.allclose(
        sorted_rows(minkowski_hull_2d(seg, pt).vertices), [[2.0, 3.0], [3.0, 3.0]]
    )
    fast = minkowski_hull_2d(seg, VPolytope([[0.0, 0.0], [0.0, 1.0]]))
    brute = hull_2d(minkowski_sum(seg, VPolytope([[0.0, 0.0], [0.0, 1.0]])).vertices)
    assert np.allclose(fast.vertices, brute.vertices)


def test_difference_hull_matches_difference_body():
    rng = np.random.default_rng(99)
    for _ in range(10):
        p = random_polytope(rng, 2)
        via_hull = difference_hull(p)
        brute = hull_2d(difference_body(p).vertices)
        assert np.allclose(via_hull.vertices, brute.vertices, atol=1e-9)


# ---------------------------------------------------------------------------
# facets_2d


def test_square_facets():
    h = facets_2d(SQUARE)
    assert not h.lower_dimensional
    rows = sorted_rows(np.hstack([h.normals, h.offsets[:, None]]))
    expected = sorted_rows(
        [[1.0, 0.0, 1.0], [-1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [0.0, -1.0, 1.0]]
    )
    assert np.allclose(rows, expected, atol=1e-12)


def test_segment_facets_flagged_and_exact():
    seg = VPolytope([[0.0, 0.0], [1.0, 0.0]])
    h = facets_2d(seg)
    assert h.lower_dimensional
    # The four halfspaces cut out exactly the segment.
    inside = np.array([0.5, 0.0])
    outside = np.array([[0.5, 0.1], [1.1, 0.0], [-0.1, 0.0]])
    assert (h.normals @ inside <= h.offsets + 1e-12).all()
    for x in outside:
        assert (h.normals @ x > h.offsets + 1e-9).any()


def test_hexagon_facet_offsets_match_support():
    hexagon = VPolytope(HEXAGON)
    h = facets_2d(hexagon)
    assert len(h.offsets) == 6
    for n, b in zip(h.normals, h.offsets):
        assert b == pytest.approx(support(hexagon, n).value, abs=1e-9)


# ---------------------------------------------------------------------------
# member / interior_point


def test_member_examples():
    tri = VPolytope([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    assert member(tri, [0.0, 0.0])
    assert not member(tri, [1.0, 1.0])
    for v in tri.vertices:
        assert member(tri, v)


def test_member_tolerance_band():
    tri = VPolytope([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    nudged = [0.5, -1e-5]
    assert not member(tri, nudged, tol=1e-7)
    assert member(tri, nudged, tol=1e-4)


def test_interior_point_examples():
    assert np.allclose(interior_point(SQUARE), [0.0, 0.0], atol=1e-9)
    assert np.allclose(interior_point(TRIANGLE), [0.0, 0.0], atol=1e-9)
    seg = VPolytope([[0.0, 0.0], [1.0, 0.0]])
    with pytest.raises(LowerDimensionalError):
        interior_point(seg)


def test_interior_point_with_repeated_vertices():
    # Repeated vertices skew the centroid toward a corner but it stays
    # interior for any full-dimensional hull.
    p = VPolytope([[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    x = interior_point(p)
    assert member(p, x)


def test_interior_point_rejects_sliver_below_certificate():
    # A triangle of height 1e-12 has no point with slack above the interior
    # margin, so it counts as lower-dimensional at working precision.
    sliver = VPolytope([[0.0, 0.0], [1.0, 0.0], [0.5, 1e-12]])
    with pytest.raises(LowerDimensionalError):
        interior_point(sliver)


def test_functionals_ignore_redundant_vertices():
    rng = np.random.default_rng(55)
    for _ in range(10):
        p = random_polytope(rng, 2)
        padded = VPolytope(np.vstack([p.vertices, p.vertices.mean(axis=0)]))
        for u in sample_directions(rng, 2, 30):
            assert support(p, u).value == pytest.approx(support(padded, u).value, abs=1e-12)
        assert np.allclose(
            hull_2d(p.vertices).vertices, hull_2d(padded.vertices).vertices
        )


# ---------------------------------------------------------------------------
# boundedness certificate and JSON


def test_hpolytope_boundedness_certificate():
    assert core.hpolytope_is_bounded(facets_2d(SQUARE))
    halfplane = HPolytope([[1.0, 0.0]], [1.0])
    assert not core.hpolytope_is_bounded(halfplane)


def test_vpolytope_json_round_trip():
    text = core.dumps_vpolytope(TRIANGLE)
    back = core.loads_vpolytope(text)
    assert back.dim == 2
    assert np.allclose(back.vertices, TRIANGLE.vertices)


def test_hpolytope_json_round_trip():
    h = facets_2d(SQUARE)
    back = core.loads_hpolytope(core.dumps_hpolytope(h))
    assert np.allclose(back.normals, h.normals)
    assert np.allclose(back.offsets, h.offsets)


def test_json_rejects_non_finite():
    with pytest.raises(ValueError):
        core.loads_vpolytope('{"dim": 2, "vertices": [[NaN, 0.0]]}')
    with pytest.raises(ValueError):
        core.loads_vpolytope('{"dim": 2, "vertices": [[Infinity, 0.0]]}')
    with pytest.raises(ValueError):
        core.loads_vpolytope(json.dumps({"dim": 2, "vertices": [[1e999, 0.0]]}))
    with pytest.raises(ValueError):
        core.loads_hpolytope(
            '{"dim": 2, "halfspaces": [{"normal": [NaN, 0.0], "offset": 1.0}]}'
        )
    with pytest.raises(ValueError):
        core.loads_hpolytope(
            '{"dim": 2, "halfspaces": [{"normal": [1.0, 0.0], "offset": -Infinity}]}'
        )


def test_vpolytope_rejects_dimension_mismatch_in_json():
    with pytest.raises(ValueError):
        core.loads_vpolytope('{"dim": 3, "vertices": [[1.0, 0.0]]}')
