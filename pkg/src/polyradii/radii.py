"""Circumradius, inradius, diameter, and minimum width relative to a gauge body.

Every quantity reduces to linear programming over vertex representations.
In the plane, where exact facet enumeration is available, the containment
LPs switch to the (much smaller) facet form once the convex-coefficient
encoding would grow past a size cap; the two forms agree to LP tolerance and
are cross-checked in the test suite.  Gauge bodies are used exactly as given
whenever the origin is already interior; otherwise they are recentered by an
interior point, which is legal for all four quantities because each is
invariant under independent translations of both arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import lp_solver
from .convex_core import (
    DimensionMismatchError,
    VPolytope,
    _as_vector,
    difference_hull,
    facets_2d,
    hull_2d,
    interior_point,
    interior_slack,
    INTERIOR_MARGIN,
)
from .functionals import (
    FunctionalValue,
    GaugeBody,
    GaugeError,
    _ray_exit,
    gauge,
    support_values,
)
from .lp_solver import EQUAL, GREATER_EQUAL, LESS_EQUAL, LinearProgram

# Above this constraint-matrix cell count the planar containment LPs switch
# from the convex-coefficient encoding to the facet encoding.  The threshold
# is deliberately low: the block-structured vertex LPs become massively
# degenerate on fine polygons and stall the dense tableau, while the facet
# form is exact in the plane at any size.
_VLP_CELL_CAP = 150_000

_CENTERED_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class RadiiResult:
    """One size quantity with its witness: center (R, r), vertex-index pair
    into the body's vertex list (D), or direction (omega)."""

    quantity: str
    value: float
    center: np.ndarray | None = None
    pair: tuple[int, int] | None = None
    direction: np.ndarray | None = None

    def to_dict(self) -> dict:
        out: dict = {"value": float(self.value)}
        if self.center is not None:
            out["center"] = [float(v) for v in self.center]
        if self.pair is not None:
            out["pair"] = [int(self.pair[0]), int(self.pair[1])]
        if self.direction is not None:
            out["direction"] = [float(v) for v in self.direction]
        return out


@dataclass(frozen=True, eq=False)
class ChainReport:
    """The five-member inequality chain linking the diameter representations.

    a1 = 2 sup_u h_{K-K}(u) / h_{C-C}(u)        (direction sweep)
    a2 = 2 sup R({x, y}, C) over point pairs    (diameter)
    a3 = R(K-K, (C-C)/2)                        (containment LP)
    a4 = R(K-K, C)                              (containment LP)
    a5 = sup gauge_C(x - y) over point pairs

    The first three agree and the chain a3 <= a4 <= a5 always holds, with
    equality throughout when the gauge body is centered.  ``a1_certified``
    is False off-plane, where a1 is only a sampled lower bound; the flags
    involving a1 (and the chord-ratio check) then assert one-sided
    consistency instead of equality.
    """

    a1: float
    a2: float
    a3: float
    a4: float
    a5: float
    flags: dict = field(default_factory=dict)
    tol: float = 1e-6
    a1_certified: bool = True

    @property
    def ok(self) -> bool:
        checked = (
            "a1_eq_a2",
            "a2_eq_a3",
            "a3_le_a4",
            "a4_le_a5",
            "diameter_le_2R",
            "eq_chord_ratio",
            "equality_case_ok",
        )
        return all(self.flags[name] for name in checked)

    def to_dict(self) -> dict:
        return {
            "a1": float(self.a1),
            "a2": float(self.a2),
            "a3": float(self.a3),
            "a4": float(self.a4),
            "a5": float(self.a5),
            "flags": dict(self.flags),
            "tol": float(self.tol),
            "a1_certified": bool(self.a1_certified),
        }


def _check_dims(k: VPolytope, c: VPolytope) -> None:
    if k.dim != c.dim:
        raise DimensionMismatchError(f"dims differ: {k.dim} vs {c.dim}")


def _dedupe(p: VPolytope) -> VPolytope:
    verts = np.unique(p.vertices, axis=0)
    return p if verts.shape[0] == p.vertices.shape[0] else VPolytope(verts)


# ---------------------------------------------------------------------------
# circumradius


def circumradius(k: VPolytope, c: VPolytope) -> RadiiResult:
    """Least lambda such that some translate x + lambda*C contains K."""
    _check_dims(k, c)
    kv, cv = _dedupe(k), _dedupe(c)
    d = k.dim
    cells = (len(kv) * (d + 1)) * (d + 1 + len(kv) * len(cv))
    if d == 2 and cells > _VLP_CELL_CAP:
        return _circumradius_facets_2d(kv, cv)
    return _circumradius_vertex_lp(kv, cv)


def _circumradius_vertex_lp(k: VPolytope, c: VPolytope) -> RadiiResult:
    kv, cv = k.vertices, c.vertices
    n, d = kv.shape
    m = cv.shape[0]
    width = d + 1 + n * m
    rows = n * (d + 1)
    lhs = np.zeros((rows, width))
    rhs = np.zeros(rows)
    eye = np.eye(d)
    for j in range(n):
        r0 = j * (d + 1)
        block = d + 1 + j * m
        # x + sum_i nu_i c_i = v_j, with sum_i nu_i = lambda.
        lhs[r0:r0 + d, :d] = eye
        lhs[r0:r0 + d, block:block + m] = cv.T
        rhs[r0:r0 + d] = kv[j]
        lhs[r0 + d, block:block + m] = 1.0
        lhs[r0 + d, d] = -1.0
    objective = np.zeros(width)
    objective[d] = 1.0
    bounds = tuple([None] * d + [0.0] * (1 + n * m))
    out = lp_solver.solve(LinearProgram(objective, lhs, (EQUAL,) * rows, rhs, bounds))
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(
            f"circumradius LP ended with status {out.status}; "
            "is the gauge body full-dimensional?"
        )
    return RadiiResult("R", max(0.0, out.value), center=out.solution[:d])


def _recover_center(normals: np.ndarray, targets: np.ndarray,
                    multipliers: np.ndarray) -> np.ndarray | None:
    """Solve the binding facet equations for the homothet center.

    ``multipliers`` are the dual-form weights; rows they charge are tight by
    complementary slackness.
    """
    binding = multipliers > 1e-9 * max(1.0, float(np.abs(multipliers).max()))
    if binding.sum() < normals.shape[1]:
        return None
    center, *_ = np.linalg.lstsq(normals[binding], targets[binding], rcond=None)
    return center


def _circumradius_facets_2d(k: VPolytope, c: VPolytope) -> RadiiResult:
    # Primal: min lambda with <u_i, x> + b_i lambda >= h_i.  Solved in dual
    # form (max h'y with U'y = 0, b'y <= 1, y >= 0): three rows instead of
    # one per facet, so phase 1 stays trivial on fine polygons.
    fc = facets_2d(c)
    if fc.lower_dimensional:
        raise RuntimeError("circumradius needs a full-dimensional gauge body")
    u, b = fc.normals, fc.offsets
    h = support_values(k, u)
    lhs = np.vstack([u.T, b])
    rhs = np.array([0.0, 0.0, 1.0])
    out = lp_solver.solve(LinearProgram(-h, lhs, (EQUAL, EQUAL, LESS_EQUAL), rhs))
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"circumradius facet LP ended with status {out.status}")
    lam = max(0.0, -out.value)
    center = _recover_center(u, h - b * lam, out.solution)
    if center is None or float(np.max(h - u @ center - b * lam)) > 1e-7:
        return _circumradius_facet_primal(u, b, h)
    return RadiiResult("R", lam, center=center)


def _circumradius_facet_primal(u, b, h) -> RadiiResult:
    lhs = np.hstack([u, b[:, None]])
    out = lp_solver.solve(
        LinearProgram(
            np.array([0.0, 0.0, 1.0]), lhs, (GREATER_EQUAL,) * len(b), h,
            (None, None, 0.0),
        )
    )
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"circumradius facet LP ended with status {out.status}")
    return RadiiResult("R", max(0.0, out.value), center=out.solution[:2])


# ---------------------------------------------------------------------------
# inradius


def inradius(k: VPolytope, c: VPolytope) -> RadiiResult:
    """Greatest lambda such that some translate x + lambda*C fits inside K."""
    _check_dims(k, c)
    kv, cv = _dedupe(k), _dedupe(c)
    d = k.dim
    cells = (len(cv) * (d + 1)) * (d + 1 + len(cv) * len(kv))
    if d == 2 and cells > _VLP_CELL_CAP:
        return _inradius_facets_2d(kv, cv)
    return _inradius_vertex_lp(kv, cv)


def _inradius_vertex_lp(k: VPolytope, c: VPolytope) -> RadiiResult:
    kv, cv = k.vertices, c.vertices
    n, d = kv.shape
    m = cv.shape[0]
    width = d + 1 + m * n
    rows = m * (d + 1)
    lhs = np.zeros((rows, width))
    rhs = np.zeros(rows)
    eye = np.eye(d)
    for j in range(m):
        r0 = j * (d + 1)
        block = d + 1 + j * n
        # sum_i mu_i v_i - x - lambda c_j = 0, with sum_i mu_i = 1.
        lhs[r0:r0 + d, block:block + n] = kv.T
        lhs[r0:r0 + d, :d] = -eye
        lhs[r0:r0 + d, d] = -cv[j]
        lhs[r0 + d, block:block + n] = 1.0
        rhs[r0 + d] = 1.0
    objective = np.zeros(width)
    objective[d] = -1.0  # maximise lambda
    bounds = tuple([None] * d + [0.0] * (1 + m * n))
    out = lp_solver.solve(LinearProgram(objective, lhs, (EQUAL,) * rows, rhs, bounds))
    if out.status == lp_solver.UNBOUNDED:
        raise ValueError("inradius is unbounded: the gauge body is a single point")
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"inradius LP ended with status {out.status}")
    return RadiiResult("r", max(0.0, -out.value), center=out.solution[:d])


def _inradius_facets_2d(k: VPolytope, c: VPolytope) -> RadiiResult:
    # Primal: max lambda with <u_i, x> + h_i lambda <= b_i.  Dual form:
    # min b'y with U'y = 0, h'y >= 1, y >= 0; infeasible exactly when the
    # gauge collapses to the origin (h = 0).
    fk = facets_2d(k)
    u, b = fk.normals, fk.offsets
    h = support_values(c, u)
    lhs = np.vstack([u.T, h])
    rhs = np.array([0.0, 0.0, 1.0])
    out = lp_solver.solve(LinearProgram(b, lhs, (EQUAL, EQUAL, GREATER_EQUAL), rhs))
    if out.status == lp_solver.INFEASIBLE:
        raise ValueError("inradius is unbounded: the gauge body is a single point")
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"inradius facet LP ended with status {out.status}")
    lam = max(0.0, out.value)
    center = _recover_center(u, b - h * lam, out.solution)
    if center is None or float(np.max(u @ center + h * lam - b)) > 1e-7:
        return _inradius_facet_primal(u, h, b)
    return RadiiResult("r", lam, center=center)


def _inradius_facet_primal(u, h, b) -> RadiiResult:
    lhs = np.hstack([u, h[:, None]])
    out = lp_solver.solve(
        LinearProgram(
            np.array([0.0, 0.0, -1.0]), lhs, (LESS_EQUAL,) * len(b), b,
            (None, None, 0.0),
        )
    )
    if out.status == lp_solver.UNBOUNDED:
        raise ValueError("inradius is unbounded: the gauge body is a single point")
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"inradius facet LP ended with status {out.status}")
    return RadiiResult("r", max(0.0, -out.value), center=out.solution[:2])


# ---------------------------------------------------------------------------
# diameter


def _half_difference_gauge(c: VPolytope) -> GaugeBody:
    half = VPolytope(0.5 * difference_hull(c).vertices)
    try:
        return GaugeBody.from_polytope(half)
    except GaugeError as exc:
        raise ValueError(
            "diameter/width need a full-dimensional gauge body"
        ) from exc


def _facet_gauge_evaluator(body: VPolytope):
    """Vectorised planar gauge via facets; valid when the origin is interior."""
    f = facets_2d(body)
    normals, offsets = f.normals, f.offsets

    def evaluate(points: np.ndarray) -> np.ndarray:
        vals = (np.atleast_2d(points) @ normals.T) / offsets
        return np.maximum(vals.max(axis=1), 0.0)

    return evaluate


def diameter(k: VPolytope, c: VPolytope) -> RadiiResult:
    """2 sup R({x, y}, C): the diameter in the norm with unit ball (C-C)/2.

    The supremum over the hull is attained on vertex pairs; the witness is
    the lexicographically first attaining index pair of the vertex list.
    """
    _check_dims(k, c)
    gb = _half_difference_gauge(c)
    verts = k.vertices
    n = verts.shape[0]
    if n == 1:
        return RadiiResult("D", 0.0, pair=(0, 0))
    best = -np.inf
    best_pair = (0, 0)
    if k.dim == 2:
        evaluate = _facet_gauge_evaluator(gb.body)
        for i in range(n - 1):
            vals = evaluate(verts[i + 1:] - verts[i])
            j = int(np.argmax(vals))
            if vals[j] > best:
                best = float(vals[j])
                best_pair = (i, i + 1 + j)
    else:
        for i in range(n - 1):
            for j in range(i + 1, n):
                val = gauge(gb, verts[j] - verts[i]).value
                if val > best:
                    best = val
                    best_pair = (i, j)
    return RadiiResult("D", max(0.0, best), pair=best_pair)


# ---------------------------------------------------------------------------
# minimum width


def _degenerate_direction(diff: VPolytope) -> np.ndarray:
    """A unit direction in which a lower-dimensional difference body is flat."""
    if diff.dim == 2:
        hull = hull_2d(diff.vertices).vertices
        if hull.shape[0] == 1:
            return np.array([1.0, 0.0])
        t = hull[1] - hull[0]
        n = np.array([t[1], -t[0]])
        return n / np.linalg.norm(n)
    _, singular, vt = np.linalg.svd(diff.vertices, full_matrices=True)
    return vt[-1]


def _ray_exit_with_duals(vertices: np.ndarray, u: np.ndarray):
    """Like functionals._ray_exit, also returning the equality-row duals."""
    n, d = vertices.shape
    lhs = np.zeros((d + 1, n + 1))
    lhs[:d, :n] = vertices.T
    lhs[:d, n] = -u
    lhs[d, :n] = 1.0
    rhs = np.concatenate([np.zeros(d), [1.0]])
    objective = np.zeros(n + 1)
    objective[n] = -1.0
    out = lp_solver.solve(LinearProgram(objective, lhs, (EQUAL,) * (d + 1), rhs))
    if out.status == lp_solver.INFEASIBLE:
        return None, None
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"ray LP failed with status {out.status}")
    duals = out.duals[:d] if out.duals is not None else None
    return float(out.solution[n]), duals


def _pinned_inscription_lp(a: VPolytope, b: VPolytope):
    """max t with t*B inside A, both centered, inscribing translate at 0.

    Because 0 lies in A, feasibility of t*w in A is monotone in t along each
    vertex ray of B, so the coupled convex-coefficient LP decomposes exactly
    into one ray-exit LP per vertex of B; the binding ray's duals supply a
    supporting normal of A at the contact, i.e. a minimising width direction.
    """
    t_star = np.inf
    binding_duals = None
    for w in b.vertices:
        if np.linalg.norm(w) <= 1e-12:
            continue  # the origin imposes no constraint
        reach, duals = _ray_exit_with_duals(a.vertices, w)
        if reach is None:
            return 0.0, None
        if reach < t_star:
            t_star = reach
            binding_duals = duals
    if not np.isfinite(t_star):
        raise ValueError("inscription is unbounded: gauge body is a single point")
    return max(0.0, t_star), binding_duals


def _width_ratio(a: VPolytope, b: VPolytope, directions: np.ndarray) -> np.ndarray:
    return 2.0 * support_values(a, directions) / support_values(b, directions)


def min_width(k: VPolytope, c: VPolytope) -> RadiiResult:
    """Thinnest relative slab: 2 inf_u h_{K-K}(u) / h_{C-C}(u).

    Computed as twice the largest t with t*(C-C) inscribed in K-K, the
    inscribing translate pinned at the origin (both bodies are centered).
    The witness direction attains the minimal support ratio: the active
    facet normal of K-K in the plane, an LP dual direction off-plane.
    """
    _check_dims(k, c)
    a = difference_hull(k)
    b = difference_hull(c)
    d = k.dim

    if d == 2:
        fb = facets_2d(b)
        if fb.lower_dimensional:
            raise ValueError("diameter/width need a full-dimensional gauge body")
        fa = facets_2d(a)
        if fa.lower_dimensional:
            return RadiiResult("omega", 0.0, direction=_degenerate_direction(a))
        ratios = 2.0 * fa.offsets / support_values(b, fa.normals)
        arg = int(np.argmin(ratios))
        direction = fa.normals[arg]
        cells = (len(b) * (d + 1)) * (1 + len(b) * len(a))
        if cells > _VLP_CELL_CAP:
            return RadiiResult("omega", float(ratios[arg]), direction=direction)
        t_star, _ = _pinned_inscription_lp(a, b)
        return RadiiResult("omega", max(0.0, 2.0 * t_star), direction=direction)

    rank = np.linalg.matrix_rank(b.vertices, tol=1e-9)
    if rank < d:
        raise ValueError("diameter/width need a full-dimensional gauge body")
    if np.linalg.matrix_rank(a.vertices, tol=1e-9) < d:
        return RadiiResult("omega", 0.0, direction=_degenerate_direction(a))

    t_star, dual = _pinned_inscription_lp(a, b)
    candidates = []
    if dual is not None:
        norm = np.linalg.norm(dual)
        if norm > 1e-9:
            candidates.extend([dual / norm, -dual / norm])
    for verts in (a.vertices, b.vertices):
        norms = np.linalg.norm(verts, axis=1)
        keep = norms > 1e-9
        candidates.append(verts[keep] / norms[keep, None])
    stack = np.vstack([np.atleast_2d(cand) for cand in candidates])
    ratios = _width_ratio(a, b, stack)
    arg = int(np.argmin(ratios))
    return RadiiResult("omega", max(0.0, 2.0 * t_star), direction=stack[arg])


def min_width_facet_2d(k: VPolytope, c: VPolytope) -> tuple[float, np.ndarray]:
    """Closed-form planar width: minimal support ratio over K-K facet normals.

    Independent of the inscription LP; exposed as the d=2 oracle.
    """
    _check_dims(k, c)
    if k.dim != 2:
        raise DimensionMismatchError("facet oracle is planar only")
    a = difference_hull(k)
    b = difference_hull(c)
    fa = facets_2d(a)
    if fa.lower_dimensional:
        return 0.0, _degenerate_direction(a)
    ratios = 2.0 * fa.offsets / support_values(b, fa.normals)
    arg = int(np.argmin(ratios))
    return float(ratios[arg]), fa.normals[arg]


# ---------------------------------------------------------------------------
# the induced norm and the centered fast path


def induced_norm(c: VPolytope, x) -> FunctionalValue:
    """The norm x -> 2 R({0, x}, C), whose unit ball is (C-C)/2."""
    gb = _half_difference_gauge(c)
    return gauge(gb, _as_vector(x, c.dim))


def _is_centered(vertices: np.ndarray, tol: float = _CENTERED_TOL) -> bool:
    sums = vertices[:, None, :] + vertices[None, :, :]
    return bool(np.abs(sums).max(axis=2).min(axis=1).max() <= tol)


def symmetric_circumradius(k: VPolytope, c: GaugeBody) -> float:
    """Centered fast path: R(K, C) = max gauge over K's vertices.

    Requires both vertex lists to be closed under negation; rejects anything
    else, because the identity fails for non-centered bodies.
    """
    if k.dim != c.dim:
        raise DimensionMismatchError(f"dims differ: {k.dim} vs {c.dim}")
    if not _is_centered(k.vertices):
        raise ValueError("symmetric circumradius needs a centered body")
    if not _is_centered(c.body.vertices):
        raise ValueError("symmetric circumradius needs a centered gauge body")
    return max(gauge(c, v).value for v in k.vertices)


# ---------------------------------------------------------------------------
# the inequality chain


def _interior_gauge(c: VPolytope) -> tuple[GaugeBody, np.ndarray]:
    """C as a gauge body: as given when the origin is interior, else recentered."""
    shift = np.zeros(c.dim)
    if interior_slack(c, shift) >= INTERIOR_MARGIN:
        return GaugeBody(c, shift), shift
    shift = interior_point(c)
    return GaugeBody.from_polytope(VPolytope(c.vertices - shift)), shift


def _unit_rows(vertices: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(vertices, axis=1)
    keep = norms > 1e-12
    return vertices[keep] / norms[keep, None]


def _gauge_is_centered(c: VPolytope, rng: np.random.Generator) -> bool:
    if c.dim == 2:
        hull = hull_2d(c.vertices)
        if len(hull) == 1:
            return bool(np.linalg.norm(hull.vertices[0]) <= _CENTERED_TOL)
        dirs = facets_2d(hull).normals
    else:
        dirs = np.vstack([_unit_rows(c.vertices), rng.normal(size=(200, c.dim))])
    forward = support_values(c, dirs)
    backward = support_values(c, -dirs)
    return bool(np.abs(forward - backward).max() <= _CENTERED_TOL)


def _max_pairwise_gauge(k: VPolytope, gb: GaugeBody) -> float:
    verts = k.vertices
    n = verts.shape[0]
    if n == 1:
        return 0.0
    if k.dim == 2:
        evaluate = _facet_gauge_evaluator(gb.body)
        best = 0.0
        for i in range(n):
            diffs = np.delete(verts, i, axis=0) - verts[i]
            best = max(best, float(evaluate(diffs).max()))
        return best
    best = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                best = max(best, gauge(gb, verts[j] - verts[i]).value)
    return best


def verify_chain(k: VPolytope, c: VPolytope, tol: float = 1e-6) -> ChainReport:
    """Compute the five chain members by independent routes and check them.

    Also checks the chord-ratio representation of the diameter and the
    classical bound D <= 2R.  Off-plane, a1 and the chord-ratio sweep are
    sampled lower bounds rather than certified values.
    """
    _check_dims(k, c)
    if tol <= 0:
        raise ValueError("tol must be positive")
    d = k.dim
    a = difference_hull(k)
    b = difference_hull(c)
    gauge_c, _ = _interior_gauge(c)
    rng = np.random.default_rng(20210321)

    if d == 2:
        fb = facets_2d(b)
        if fb.lower_dimensional:
            raise ValueError("chain verification needs a full-dimensional gauge body")
        sweep = np.vstack([facets_2d(a).normals, fb.normals])
        a1_certified = True
    else:
        random_dirs = rng.normal(size=(500, d))
        random_dirs /= np.linalg.norm(random_dirs, axis=1, keepdims=True)
        sweep = np.vstack([_unit_rows(b.vertices), random_dirs])
        a1_certified = False
    a1 = float(np.max(_width_ratio(a, b, sweep)))

    a2 = diameter(k, c).value
    a3 = circumradius(a, VPolytope(0.5 * b.vertices)).value
    a4 = circumradius(a, c).value
    a5 = _max_pairwise_gauge(k, gauge_c)

    # Chord-ratio representation of the diameter (convex bodies).
    chord_dirs = [_unit_rows(a.vertices), _unit_rows(b.vertices)]
    if d != 2:
        extra = rng.normal(size=(300, d))
        chord_dirs.append(extra / np.linalg.norm(extra, axis=1, keepdims=True))
    chord_sweep = np.vstack(chord_dirs)
    if d == 2 and not facets_2d(a).lower_dimensional:
        # Chord lengths are reciprocal gauges; both bodies are centered and
        # full-dimensional here, so the planar facet form applies.
        gamma_a = _facet_gauge_evaluator(a)(chord_sweep)
        gamma_b = _facet_gauge_evaluator(b)(chord_sweep)
        chord_value = 2.0 * float(np.max(gamma_b / gamma_a))
    else:
        length_b = _facet_gauge_evaluator(b) if d == 2 else None
        ratios = []
        for u in chord_sweep:
            lk = _ray_exit(a.vertices, u)
            if lk is None:
                continue
            if length_b is not None:
                lc = float(1.0 / length_b(u[None, :])[0])
            else:
                lc = _ray_exit(b.vertices, u)
            if lc is None or lc <= 1e-12:
                continue
            ratios.append(lk / lc)
        chord_value = 2.0 * max(ratios) if ratios else 0.0

    two_r = 2.0 * circumradius(k, c).value
    centered = _gauge_is_centered(c, rng)

    # Off-plane, a1 and the chord sweep are sampled lower bounds, so only
    # their one-sided consistency is checkable; a1_certified records this.
    if a1_certified:
        a1_consistent = bool(abs(a1 - a2) <= tol)
        chord_consistent = bool(abs(chord_value - a2) <= tol)
    else:
        a1_consistent = bool(a1 <= a2 + tol)
        chord_consistent = bool(chord_value <= a2 + tol)
    flags = {
        "a1_eq_a2": a1_consistent,
        "a2_eq_a3": bool(abs(a2 - a3) <= tol),
        "a3_le_a4": bool(a3 <= a4 + tol),
        "a4_le_a5": bool(a4 <= a5 + tol),
        "diameter_le_2R": bool(a2 <= two_r + tol),
        "centered_gauge": centered,
        "eq_chord_ratio": chord_consistent,
    }
    certified_spread = max(a2, a3, a4, a5) - min(a2, a3, a4, a5)
    all_equal = bool(a1_consistent and certified_spread <= tol
                     and (not a1_certified or abs(a5 - a1) <= tol))
    flags["all_equal"] = all_equal
    flags["equality_case_ok"] = bool(not centered or all_equal)

    return ChainReport(a1, a2, a3, a4, a5, flags=flags, tol=tol,
                       a1_certified=a1_certified)


# ---------------------------------------------------------------------------
# aggregate report


def radii_report(k: VPolytope, c: VPolytope, quantities=("R", "r", "D", "omega"),
                 chain: bool = True, tol: float = 1e-6) -> dict:
    """All requested quantities plus the chain report, in stable key order."""
    report: dict = {}
    if "R" in quantities:
        report["R"] = circumradius(k, c).to_dict()
    if "r" in quantities:
        report["r"] = inradius(k, c).to_dict()
    if "D" in quantities:
        report["D"] = diameter(k, c).to_dict()
    if "omega" in quantities:
        report["omega"] = min_width(k, c).to_dict()
    if chain:
        report["chain"] = verify_chain(k, c, tol=tol).to_dict()
    return report
