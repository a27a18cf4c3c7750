"""Polytope representations and Minkowski algebra.

Bodies are stored by their vertices (V-representation).  Vertex lists may
contain redundant points: every functional downstream reads through a max or
an LP, so redundancy is harmless and is only ever pruned by the 2D hull.
Halfspace representations exist solely in the plane, where facet enumeration
is exact and cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import lp_solver
from .lp_solver import EQUAL, LinearProgram

# Comparison tolerances: arithmetic identities vs. LP-derived equalities.
EPS_GEOMETRY = 1e-9
EPS_LP = 1e-7

# Positive slack needed to certify a point as interior / a body as
# full-dimensional.
INTERIOR_MARGIN = 1e-9


class DimensionMismatchError(ValueError):
    """Operands live in different ambient dimensions."""


class LowerDimensionalError(ValueError):
    """The polytope has no interior in its ambient space."""


def _as_vector(x, dim: int | None = None) -> np.ndarray:
    v = np.asarray(x, dtype=float).ravel()
    if v.size == 0 or not np.isfinite(v).all():
        raise ValueError("vector must be non-empty and finite")
    if dim is not None and v.size != dim:
        raise DimensionMismatchError(f"expected dimension {dim}, got {v.size}")
    return v


@dataclass(frozen=True, eq=False)
class VPolytope:
    """Convex hull of a finite, possibly redundant, vertex list."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.atleast_2d(np.asarray(self.vertices, dtype=float))
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise ValueError("vertices must form a non-empty (n, d) array")
        if not np.isfinite(v).all():
            raise ValueError("vertices must be finite")
        v = v.copy()
        v.flags.writeable = False
        object.__setattr__(self, "vertices", v)

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    def __len__(self) -> int:
        return self.vertices.shape[0]

    def to_dict(self) -> dict:
        return {"dim": self.dim, "vertices": self.vertices.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "VPolytope":
        verts = np.asarray(data["vertices"], dtype=float)
        p = cls(verts)
        if p.dim != int(data["dim"]):
            raise ValueError("declared dimension does not match vertex data")
        return p


@dataclass(frozen=True, eq=False)
class HPolytope:
    """Intersection of halfspaces ``normal @ x <= offset``.

    ``lower_dimensional`` marks H-forms produced for degenerate 2D hulls
    (points and segments), whose halfspaces bound the affine hull exactly.
    """

    normals: np.ndarray
    offsets: np.ndarray
    lower_dimensional: bool = field(default=False)

    def __post_init__(self):
        n = np.atleast_2d(np.asarray(self.normals, dtype=float))
        b = np.asarray(self.offsets, dtype=float).ravel()
        if n.shape[0] != b.size or n.shape[0] < 1:
            raise ValueError("need one offset per normal")
        if not (np.isfinite(n).all() and np.isfinite(b).all()):
            raise ValueError("halfspace data must be finite")
        if (np.linalg.norm(n, axis=1) < EPS_GEOMETRY).any():
            raise ValueError("normals must be nonzero")
        n = n.copy()
        n.flags.writeable = False
        b = b.copy()
        b.flags.writeable = False
        object.__setattr__(self, "normals", n)
        object.__setattr__(self, "offsets", b)

    @property
    def dim(self) -> int:
        return self.normals.shape[1]

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "halfspaces": [
                {"normal": n.tolist(), "offset": float(b)}
                for n, b in zip(self.normals, self.offsets)
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "HPolytope":
        rows = data["halfspaces"]
        normals = np.asarray([h["normal"] for h in rows], dtype=float)
        offsets = np.asarray([h["offset"] for h in rows], dtype=float)
        h = cls(normals, offsets)
        if h.dim != int(data["dim"]):
            raise ValueError("declared dimension does not match halfspace data")
        return h


# ---------------------------------------------------------------------------
# Minkowski algebra


def minkowski_sum(p: VPolytope, q: VPolytope) -> VPolytope:
    """All pairwise vertex sums; the hull is the Minkowski sum of the hulls."""
    if p.dim != q.dim:
        raise DimensionMismatchError(f"dims differ: {p.dim} vs {q.dim}")
    sums = (p.vertices[:, None, :] + q.vertices[None, :, :]).reshape(-1, p.dim)
    return VPolytope(sums)


def transform(p: VPolytope, scale: float, offset, reflect: bool = False) -> VPolytope:
    """Map vertices v -> offset + scale * (-v if reflect else v)."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    off = _as_vector(offset, p.dim)
    sign = -1.0 if reflect else 1.0
    return VPolytope(off + scale * sign * p.vertices)


def difference_body(p: VPolytope) -> VPolytope:
    """The centered body with all pairwise vertex differences listed."""
    zero = np.zeros(p.dim)
    return minkowski_sum(p, transform(p, 1.0, zero, reflect=True))


# ---------------------------------------------------------------------------
# 2D hull and facets


def hull_2d(points) -> VPolytope:
    """Counter-clockwise extreme points, starting at the lexicographic minimum.

    Collinear interior points are dropped (strictly convex turns only), which
    makes the output canonical for golden comparisons.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[0] < 1:
        raise ValueError("need at least one point")
    if pts.shape[1] != 2:
        raise DimensionMismatchError("hull_2d expects planar points")
    if not np.isfinite(pts).all():
        raise ValueError("points must be finite")
    pts = np.unique(pts, axis=0)  # dedupes and sorts lexicographically
    if pts.shape[0] <= 2:
        return VPolytope(pts)

    span = float(np.abs(pts).max())
    turn_tol = 1e-12 * max(1.0, span * span)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[np.ndarray] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= turn_tol:
            lower.pop()
        lower.append(p)
    upper: list[np.ndarray] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= turn_tol:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return VPolytope(np.array(hull))


def minkowski_hull_2d(p: VPolytope, q: VPolytope) -> VPolytope:
    """Hull of the planar Minkowski sum via the edge-merge of the two hulls.

    Equivalent to ``hull_2d(minkowski_sum(p, q).vertices)`` but linear in the
    hull sizes instead of quadratic, which is what keeps difference bodies of
    fine polygonal approximations affordable.
    """
    if p.dim != 2 or q.dim != 2:
        raise DimensionMismatchError("minkowski_hull_2d expects planar bodies")
    a = hull_2d(p.vertices).vertices
    b = hull_2d(q.vertices).vertices
    if a.shape[0] == 1:
        return VPolytope(b + a[0])
    if b.shape[0] == 1:
        return VPolytope(a + b[0])

    def bottom_first(v):
        start = np.lexsort((v[:, 0], v[:, 1]))[0]
        return np.roll(v, -start, axis=0)

    a = bottom_first(a)
    b = bottom_first(b)
    edges_a = np.diff(np.vstack([a, a[:1]]), axis=0)
    edges_b = np.diff(np.vstack([b, b[:1]]), axis=0)
    edges = np.vstack([edges_a, edges_b])
    angles = np.mod(np.arctan2(edges[:, 1], edges[:, 0]), 2.0 * np.pi)
    order = np.argsort(angles, kind="stable")
    walk = np.vstack([a[0] + b[0], a[0] + b[0] + np.cumsum(edges[order], axis=0)[:-1]])
    return hull_2d(walk)


def difference_hull(p: VPolytope) -> VPolytope:
    """Hull-reduced difference body; falls back to deduplication off-plane."""
    if p.dim == 2:
        zero = np.zeros(2)
        return minkowski_hull_2d(p, transform(p, 1.0, zero, reflect=True))
    diffs = difference_body(p).vertices
    return VPolytope(np.unique(diffs, axis=0))


def facets_2d(p: VPolytope) -> HPolytope:
    """One outward-unit-normal halfspace per hull edge of a planar body.

    Points and segments get the bounding halfspaces of their affine hull
    (whose intersection is exactly the body) with ``lower_dimensional`` set.
    """
    if p.dim != 2:
        raise DimensionMismatchError("facets_2d expects a planar body")
    hull = hull_2d(p.vertices).vertices
    if hull.shape[0] == 1:
        x, y = hull[0]
        normals = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
        offsets = np.array([x, -x, y, -y])
        return HPolytope(normals, offsets, lower_dimensional=True)
    if hull.shape[0] == 2:
        a, b = hull
        t = (b - a) / np.linalg.norm(b - a)
        n = np.array([t[1], -t[0]])
        normals = np.array([n, -n, t, -t])
        offsets = np.array([n @ a, -(n @ a), t @ b, -(t @ a)])
        return HPolytope(normals, offsets, lower_dimensional=True)
    edges = np.diff(np.vstack([hull, hull[:1]]), axis=0)
    # CCW orientation: the outward normal is the edge direction rotated -90°.
    normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
    normals /= np.linalg.norm(normals, axis=1, keepdims=True)
    offsets = np.einsum("ij,ij->i", normals, hull)
    return HPolytope(normals, offsets)


# ---------------------------------------------------------------------------
# LP-backed predicates


def member(p: VPolytope, x, tol: float = EPS_LP) -> bool:
    """True iff x is a convex combination of the vertices, within tol.

    Solved as an elastic feasibility LP minimising the L1 residual of the
    combination; LP failures propagate as RuntimeError.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    target = _as_vector(x, p.dim)
    n, d = p.vertices.shape
    # Variables: convex weights, then positive/negative residual parts.
    lhs = np.zeros((d + 1, n + 2 * d))
    lhs[:d, :n] = p.vertices.T
    lhs[:d, n:n + d] = np.eye(d)
    lhs[:d, n + d:] = -np.eye(d)
    lhs[d, :n] = 1.0
    rhs = np.concatenate([target, [1.0]])
    objective = np.concatenate([np.zeros(n), np.ones(2 * d)])
    out = lp_solver.solve(LinearProgram(objective, lhs, (EQUAL,) * (d + 1), rhs))
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"membership LP failed with status {out.status}")
    return out.value <= tol + 1e-12


def _axis_slack(p: VPolytope, center: np.ndarray | None) -> tuple[np.ndarray, float]:
    """Largest rho with center ± rho e_k inside the hull for every axis k.

    With ``center=None`` the center is a free variable; the optimum then
    certifies full-dimensionality (rho > 0 iff the body has interior).
    """
    n, d = p.vertices.shape
    fixed = center is not None
    extra = 0 if fixed else d
    width = extra + 1 + 2 * d * n
    rows = 2 * d * (d + 1)
    lhs = np.zeros((rows, width))
    rhs = np.zeros(rows)
    directions = np.vstack([np.eye(d), -np.eye(d)])
    for k, direction in enumerate(directions):
        block = extra + 1 + k * n
        r0 = k * (d + 1)
        # sum_i w_i v_i - center - rho * direction = 0
        lhs[r0:r0 + d, block:block + n] = p.vertices.T
        lhs[r0:r0 + d, extra] = -direction
        if fixed:
            rhs[r0:r0 + d] = center
        else:
            lhs[r0:r0 + d, :d] = -np.eye(d)
        lhs[r0 + d, block:block + n] = 1.0
        rhs[r0 + d] = 1.0
    objective = np.zeros(width)
    objective[extra] = -1.0  # maximise rho
    bounds = tuple([None] * extra + [0.0] + [0.0] * (2 * d * n))
    out = lp_solver.solve(LinearProgram(objective, lhs, (EQUAL,) * rows, rhs, bounds))
    if out.status == lp_solver.INFEASIBLE:
        return (center if fixed else p.vertices[0]), -1.0
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"interior-slack LP failed with status {out.status}")
    point = center if fixed else out.solution[:d]
    return np.asarray(point, dtype=float), float(out.solution[extra])


def interior_slack(p: VPolytope, point) -> float:
    """Positive-slack certificate of ``point`` being interior (negative if not)."""
    _, rho = _axis_slack(p, _as_vector(point, p.dim))
    return rho


def interior_point(p: VPolytope) -> np.ndarray:
    """The vertex centroid when it certifies as interior, else a max-slack point.

    Raises LowerDimensionalError when no point has positive slack, i.e. the
    hull has empty interior.
    """
    centroid = p.vertices.mean(axis=0)
    _, rho = _axis_slack(p, centroid)
    if rho > INTERIOR_MARGIN:
        return centroid
    point, rho = _axis_slack(p, None)
    if rho > INTERIOR_MARGIN:
        return point
    raise LowerDimensionalError("polytope has empty interior")


def is_full_dimensional(p: VPolytope) -> bool:
    try:
        interior_point(p)
    except LowerDimensionalError:
        return False
    return True


def hpolytope_is_bounded(h: HPolytope) -> bool:
    """LP certificate of boundedness in every ±coordinate direction."""
    d = h.dim
    relations = (lp_solver.LESS_EQUAL,) * h.normals.shape[0]
    bounds = (None,) * d
    for k in range(d):
        for sign in (1.0, -1.0):
            objective = np.zeros(d)
            objective[k] = -sign  # maximise sign * x_k
            out = lp_solver.solve(
                LinearProgram(objective, h.normals, relations, h.offsets, bounds)
            )
            if out.status == lp_solver.UNBOUNDED:
                return False
            if out.status == lp_solver.INFEASIBLE:
                return True  # empty sets are vacuously bounded
            if out.status != lp_solver.OPTIMAL:
                raise RuntimeError(f"boundedness LP failed with status {out.status}")
    return True


# ---------------------------------------------------------------------------
# JSON interchange


def _reject_constant(token: str):
    raise ValueError(f"non-finite JSON token {token!r} rejected")


def loads_vpolytope(text: str) -> VPolytope:
    data = json.loads(text, parse_constant=_reject_constant)
    return VPolytope.from_dict(data)


def dumps_vpolytope(p: VPolytope) -> str:
    return json.dumps(p.to_dict())


def loads_hpolytope(text: str) -> HPolytope:
    data = json.loads(text, parse_constant=_reject_constant)
    return HPolytope.from_dict(data)


def dumps_hpolytope(h: HPolytope) -> str:
    return json.dumps(h.to_dict())
