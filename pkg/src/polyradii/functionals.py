"""Support, width, gauge, radius, chord-length, and polar machinery.

All functionals are exact on V-polytopes: supports are vertex maxima, gauges
and radius evaluations are tiny LPs over convex-combination weights.  A gauge
is always evaluated on the body exactly as given; it is an error if the
origin is not interior, because the Minkowski functional is translation
sensitive and silent recentering would change its values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import lp_solver
from .convex_core import (
    EPS_GEOMETRY,
    INTERIOR_MARGIN,
    HPolytope,
    VPolytope,
    _as_vector,
    difference_hull,
    interior_slack,
)
from .lp_solver import EQUAL, LinearProgram


class GaugeError(ValueError):
    """The body cannot carry a Minkowski functional (origin not interior)."""


@dataclass(frozen=True, eq=False)
class FunctionalValue:
    """A functional evaluation with an optional attaining witness point."""

    value: float
    witness: np.ndarray | None = None


@dataclass(frozen=True, eq=False)
class GaugeBody:
    """A polytope certified to contain the origin in its interior."""

    body: VPolytope
    interior_certificate: np.ndarray

    @classmethod
    def from_polytope(cls, body: VPolytope) -> "GaugeBody":
        origin = np.zeros(body.dim)
        margin = interior_slack(body, origin)
        if margin < INTERIOR_MARGIN:
            raise GaugeError(
                "origin is not interior to the gauge body "
                f"(slack {margin:.3e}); translate the body first"
            )
        return cls(body, origin)

    @property
    def dim(self) -> int:
        return self.body.dim


def support(k: VPolytope, u) -> FunctionalValue:
    """max over vertices of <u, v>; the witness is the lowest attaining vertex."""
    direction = _as_vector(u, k.dim)
    products = k.vertices @ direction
    idx = int(np.argmax(products))
    return FunctionalValue(float(products[idx]), k.vertices[idx].copy())


def support_values(k: VPolytope, directions: np.ndarray) -> np.ndarray:
    """Vectorised support over rows of ``directions``."""
    return np.max(np.asarray(directions, dtype=float) @ k.vertices.T, axis=1)


def width_fn(k: VPolytope, u) -> FunctionalValue:
    """Slab width of the body orthogonal to u: h(u) + h(-u)."""
    direction = _as_vector(u, k.dim)
    value = support(k, direction).value + support(k, -direction).value
    return FunctionalValue(float(value))


def gauge(c: GaugeBody, x) -> FunctionalValue:
    """Minkowski functional of the gauge body: least lambda with x in lambda*C.

    Solved as min sum(nu) subject to sum(nu_i c_i) = x, nu >= 0: the scaled
    convex weights sum exactly to the scaling factor.  The witness is the
    boundary point where the ray through x leaves the body.
    """
    point = _as_vector(x, c.dim)
    verts = c.body.vertices
    n = verts.shape[0]
    lp = LinearProgram(np.ones(n), verts.T, (EQUAL,) * c.dim, point)
    out = lp_solver.solve(lp)
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"gauge LP failed with status {out.status}")
    value = max(0.0, out.value)
    witness = point / value if value > EPS_GEOMETRY else None
    return FunctionalValue(float(value), witness)


def _ray_exit(vertices: np.ndarray, u: np.ndarray) -> float | None:
    """sup of alpha >= 0 with alpha*u in the hull, or None if the ray misses."""
    n, d = vertices.shape
    # Variables: convex weights then alpha; rows: combination hits alpha*u.
    lhs = np.zeros((d + 1, n + 1))
    lhs[:d, :n] = vertices.T
    lhs[:d, n] = -u
    lhs[d, :n] = 1.0
    rhs = np.concatenate([np.zeros(d), [1.0]])
    objective = np.zeros(n + 1)
    objective[n] = -1.0  # maximise alpha
    out = lp_solver.solve(LinearProgram(objective, lhs, (EQUAL,) * (d + 1), rhs))
    if out.status == lp_solver.INFEASIBLE:
        return None
    if out.status != lp_solver.OPTIMAL:
        raise RuntimeError(f"ray LP failed with status {out.status}")
    return float(out.solution[n])


def radius_fn(k: VPolytope | GaugeBody, u) -> FunctionalValue:
    """Boundary distance along u: sup of alpha with alpha*u inside.

    Requires the origin interior (pass a GaugeBody to skip re-certification);
    the value is the pointwise reciprocal of the body's own gauge.
    """
    if isinstance(k, GaugeBody):
        body = k.body
    else:
        body = k
        if interior_slack(body, np.zeros(body.dim)) < INTERIOR_MARGIN:
            raise GaugeError("origin is not interior to the body")
    direction = _as_vector(u, body.dim)
    if np.linalg.norm(direction) < EPS_GEOMETRY:
        raise ValueError("direction must be nonzero")
    alpha = _ray_exit(body.vertices, direction)
    if alpha is None:
        raise RuntimeError("radius LP infeasible despite interior origin")
    return FunctionalValue(alpha, alpha * direction)


def max_chord(k: VPolytope, u) -> FunctionalValue:
    """Longest chord of the body in direction u, i.e. the reach of K-K along u."""
    direction = _as_vector(u, k.dim)
    if np.linalg.norm(direction) < EPS_GEOMETRY:
        raise ValueError("direction must be nonzero")
    diff = difference_hull(k)
    alpha = _ray_exit(diff.vertices, direction)
    if alpha is None:
        # The ray leaves the difference body immediately: zero-length chord.
        return FunctionalValue(0.0, np.zeros(k.dim))
    return FunctionalValue(alpha, alpha * direction)


def polar(k: VPolytope) -> HPolytope:
    """Polar set {x : h_K(x) <= 1} as one halfspace per listed vertex.

    Vertices at the origin contribute the trivial inequality 0 <= 1 and are
    skipped so every stored normal is nonzero.
    """
    verts = k.vertices
    keep = np.linalg.norm(verts, axis=1) >= EPS_GEOMETRY
    if not keep.any():
        raise ValueError("polar of the origin alone is all of space")
    kept = verts[keep]
    return HPolytope(kept, np.ones(kept.shape[0]))


class HyperplaneDistances(NamedTuple):
    support: float
    origin_distance: float
    width_distance: float


def supporting_hyperplane_distance(k: VPolytope, u) -> HyperplaneDistances:
    """Distances from the origin to the two supporting hyperplanes normal to u.

    ``origin_distance`` is |h(u)| (u must be a unit vector).  The sum
    ``width_distance`` equals the width w(u) whenever the origin lies between
    the two hyperplanes, in particular whenever the body contains the origin.
    """
    direction = _as_vector(u, k.dim)
    if abs(np.linalg.norm(direction) - 1.0) > EPS_GEOMETRY:
        raise ValueError("direction must be a unit vector")
    h = support(k, direction).value
    h_neg = support(k, -direction).value
    return HyperplaneDistances(float(h), abs(h), abs(h) + abs(h_neg))
