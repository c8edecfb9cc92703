"""Numeric tracing of configuration curves with rotation gauge fixing.

A realization of a graph with |V| vertices is flattened to 3|V|
coordinates.  The residual stacks one unit-sphere equation per vertex, one
length equation per edge and three gauge equations (two pinning the anchor
vertex to (1,0,0), one confining the meridian vertex to the plane z = 0),
which kill the three rotational degrees of freedom.  On a flexible
framework the Jacobian then has corank exactly 1 at a regular curve point,
and the curve is followed with a tangent predictor and a Gauss-Newton
corrector.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    InsufficientSamplesError,
    RankDeficientError,
    SeedNotOnCurveError,
    SphflexError,
    StepFailureError,
    UnderConstrainedError,
)
from .graphs import Graph, k33
from .motions import (
    KIND_TRACED,
    CdaParams,
    MotionTrajectory,
    cda_lengths,
    cda_motion,
    cda_params_from_e,
    make_trajectory,
)
from .spherical import (
    LengthAssignment,
    SphericalRealization,
    Vec,
    essentially_distinct,
)

CORANK_REL_TOL = 1e-7


@dataclass(frozen=True)
class GaugeFix:
    """Anchor vertex pinned to (1,0,0); meridian vertex held in {z = 0}."""

    anchor: int
    meridian: int

    def __post_init__(self):
        if self.anchor == self.meridian:
            raise SphflexError("anchor and meridian must differ")


def default_gauge(g: Graph) -> GaugeFix:
    anchor = g.vertices[0]
    return GaugeFix(anchor, g.neighbors(anchor)[0])


@dataclass(frozen=True)
class TraceConfig:
    step_size: float = 0.02
    max_steps: int = 5000
    newton_tol: float = 1e-12
    max_newton_iters: int = 30
    min_step: float = 1e-7

    def __post_init__(self):
        if min(self.step_size, self.max_steps, self.max_newton_iters) <= 0:
            raise SphflexError("trace configuration values must be positive")
        if self.newton_tol < 1e-13:
            raise SphflexError("newton_tol below 1e-13 is not resolvable")


def _rotation_taking(a: Vec, b: Vec) -> np.ndarray:
    """Rotation matrix sending unit vector a to unit vector b."""
    v = np.cross(a, b)
    c = float(a @ b)
    if 1.0 + c < 1e-12:
        # antipodal: half-turn about any axis orthogonal to a
        axis = np.cross(a, [1.0, 0.0, 0.0])
        if np.linalg.norm(axis) < 1e-6:
            axis = np.cross(a, [0.0, 1.0, 0.0])
        axis /= np.linalg.norm(axis)
        return 2.0 * np.outer(axis, axis) - np.eye(3)
    k = np.array([[0.0, -v[2], v[1]], [v[2], 0.0, -v[0]], [-v[1], v[0], 0.0]])
    return np.eye(3) + k + k @ k / (1.0 + c)


def re_gauge(rho: SphericalRealization, gauge: GaugeFix) -> SphericalRealization:
    """Rotate a realization into the gauge slice.

    The anchor goes to (1,0,0); the meridian vertex is spun about the x
    axis onto {z = 0, y > 0}.
    """
    r1 = _rotation_taking(rho.point(gauge.anchor), np.array([1.0, 0.0, 0.0]))
    pts = {v: r1 @ p for v, p in rho.placement.items()}
    m = pts[gauge.meridian]
    phi = np.arctan2(m[2], m[1])
    c, s = np.cos(phi), np.sin(phi)
    r2 = np.array([[1.0, 0.0, 0.0], [0.0, c, s], [0.0, -s, c]])
    return SphericalRealization({v: r2 @ p for v, p in pts.items()})


def _vertex_order(g: Graph) -> tuple[int, ...]:
    return g.vertices


def residual_vector(
    g: Graph, lam: LengthAssignment, coords: Vec, gauge: GaugeFix
) -> Vec:
    """Sphere, edge and gauge residuals, in that order."""
    order = _vertex_order(g)
    idx = {v: i for i, v in enumerate(order)}
    pts = coords.reshape(len(order), 3)
    rows = [pts[i] @ pts[i] - 1.0 for i in range(len(order))]
    for a, b in g.edges:
        rows.append(0.5 * (1.0 - pts[idx[a]] @ pts[idx[b]]) - lam.length(a, b))
    pa = pts[idx[gauge.anchor]]
    rows.extend([pa[1], pa[2], pts[idx[gauge.meridian]][2]])
    return np.array(rows)


def jacobian(g: Graph, lam: LengthAssignment, coords: Vec, gauge: GaugeFix) -> Vec:
    order = _vertex_order(g)
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    pts = coords.reshape(n, 3)
    rows = n + g.num_edges + 3
    jac = np.zeros((rows, 3 * n))
    for i in range(n):
        jac[i, 3 * i : 3 * i + 3] = 2.0 * pts[i]
    for r, (a, b) in enumerate(g.edges, start=n):
        ia, ib = idx[a], idx[b]
        jac[r, 3 * ia : 3 * ia + 3] = -0.5 * pts[ib]
        jac[r, 3 * ib : 3 * ib + 3] = -0.5 * pts[ia]
    base = n + g.num_edges
    ia = idx[gauge.anchor]
    im = idx[gauge.meridian]
    jac[base, 3 * ia + 1] = 1.0
    jac[base + 1, 3 * ia + 2] = 1.0
    jac[base + 2, 3 * im + 2] = 1.0
    return jac


def corank_and_tangent(jac: Vec, rel_tol: float = CORANK_REL_TOL) -> tuple[int, Vec]:
    """Numeric corank and the unit kernel direction of smallest stretch."""
    _, svals, vt = np.linalg.svd(jac)
    n = jac.shape[1]
    svals = np.concatenate([svals, np.zeros(n - len(svals))])
    cutoff = max(svals[0], 1.0) * rel_tol
    corank = int(np.sum(svals < cutoff))
    return corank, vt[-1]


def newton_correct(
    g: Graph,
    lam: LengthAssignment,
    coords: Vec,
    gauge: GaugeFix,
    tol: float,
    max_iters: int,
    arc_constraint: Optional[tuple[Vec, Vec, float]] = None,
) -> Optional[Vec]:
    """Gauss-Newton projection onto the constraint set.

    With ``arc_constraint = (base, tangent, h)`` a pseudo-arclength row
    ``(x - base) . tangent = h`` is appended, which pins the corrected
    point ahead of ``base`` and lets the path march through folds instead
    of sliding back.
    """
    x = coords.copy()
    for _ in range(max_iters):
        r = residual_vector(g, lam, x, gauge)
        if arc_constraint is not None:
            base, tangent, h = arc_constraint
            r = np.concatenate([r, [float((x - base) @ tangent) - h]])
        if np.abs(r).max() <= tol:
            return x
        jac = jacobian(g, lam, x, gauge)
        if arc_constraint is not None:
            jac = np.vstack([jac, arc_constraint[1]])
        step, *_ = np.linalg.lstsq(jac, -r, rcond=None)
        x = x + step
        if not np.all(np.isfinite(x)):
            return None
    r = residual_vector(g, lam, x, gauge)
    if arc_constraint is not None:
        base, tangent, h = arc_constraint
        r = np.concatenate([r, [float((x - base) @ tangent) - h]])
    return x if np.abs(r).max() <= tol else None


@dataclass(frozen=True)
class TraceResult:
    trajectory: MotionTrajectory
    closed: bool
    stop_reason: str
    steps: int


def trace(
    g: Graph,
    lam: LengthAssignment,
    seed: SphericalRealization,
    gauge: Optional[GaugeFix] = None,
    config: Optional[TraceConfig] = None,
) -> TraceResult:
    """Follow the configuration curve through a seed realization.

    The seed is re-gauged and Newton-polished; a Jacobian corank other
    than 1 raises ``RankDeficientError`` (corank 0 means the gauged
    framework is rigid).  Samples are spaced by arclength steps; the trace
    stops on loop closure (return to the seed with aligned tangent), step
    exhaustion, a singular point, or an unrecoverable corrector failure.
    """
    gauge = gauge or default_gauge(g)
    cfg = config or TraceConfig()
    order = _vertex_order(g)

    x0 = re_gauge(seed, gauge).as_array(order)
    x0 = newton_correct(g, lam, x0, gauge, cfg.newton_tol, cfg.max_newton_iters)
    if x0 is None:
        raise SeedNotOnCurveError("seed does not satisfy the constraints")
    corank, tangent = corank_and_tangent(jacobian(g, lam, x0, gauge))
    if corank == 0:
        raise RankDeficientError(0, "corank 0 at seed: framework is rigid")
    if corank != 1:
        raise RankDeficientError(corank, f"corank {corank} at seed: not a curve point")
    if tangent[np.argmax(np.abs(tangent))] < 0:
        tangent = -tangent

    frames = [(0.0, SphericalRealization.from_array(order, x0))]
    x, t_prev = x0, tangent
    arclength = 0.0
    went_far = False
    closed = False
    reason = "max_steps"
    h = cfg.step_size
    steps_done = 0

    while steps_done < cfg.max_steps:
        # predictor-corrector with step halving; the pseudo-arclength row
        # forces genuine progress so folds cannot bounce the path back
        nxt = None
        while h >= cfg.min_step:
            cand = newton_correct(
                g,
                lam,
                x + h * t_prev,
                gauge,
                cfg.newton_tol,
                cfg.max_newton_iters,
                arc_constraint=(x, t_prev, h),
            )
            if cand is not None:
                crk, t_new = corank_and_tangent(jacobian(g, lam, cand, gauge))
                if crk >= 2:
                    reason = "singular_point"
                    nxt = None
                    break
                if float(t_new @ t_prev) < 0:
                    t_new = -t_new
                if float(t_new @ t_prev) > 0.2:
                    nxt = (cand, t_new)
                    break
            h *= 0.5
        else:
            reason = "step_failure"
        if nxt is None:
            if reason == "max_steps":
                reason = "step_failure"
            break
        x, t_prev = nxt
        arclength += h
        steps_done += 1
        frames.append((arclength, SphericalRealization.from_array(order, x)))
        h = min(h * 1.3, cfg.step_size)

        dist_to_seed = float(np.linalg.norm(x - x0))
        if dist_to_seed > 3.0 * cfg.step_size:
            went_far = True
        if (
            went_far
            and dist_to_seed <= 1.5 * h
            and float(t_prev @ tangent) > 0.5
        ):
            # candidate return: project onto the curve slice through the
            # seed orthogonal to the seed tangent; a genuine loop lands on
            # the seed itself, a near-miss pass does not
            back = newton_correct(
                g,
                lam,
                x,
                gauge,
                cfg.newton_tol,
                cfg.max_newton_iters,
                arc_constraint=(x0, tangent, 0.0),
            )
            if back is not None and float(np.abs(back - x0).max()) <= 1e3 * cfg.newton_tol:
                closed = True
                reason = "loop_closed"
                break

    if len(frames) < 2:
        raise StepFailureError("no step succeeded from the seed")
    traj = make_trajectory(g, lam, frames, KIND_TRACED, tol=max(1e-9, cfg.newton_tol))
    return TraceResult(traj, closed, reason, steps_done)


def cda_seed_realization(
    params: CdaParams, steps: int = 60, newton_tol: float = 1e-12
) -> SphericalRealization:
    """A compatible realization for any point of the relation curve.

    The closed-form parametrization exists only at (a, e) = (3/5, 3/4);
    other pairs are reached by sliding |e| from 3/4 to the target while
    Newton-correcting the realization onto the deformed length assignment
    at every intermediate step.  Sign changes of a or e are applied at the
    end by antipoding vertices (1 and 3 for a, 6 for e), which moves along
    the relation curve's mirror branches without leaving it.
    """
    g = k33()
    gauge = GaugeFix(1, 2)
    order = _vertex_order(g)
    reference = cda_params_from_e(0.75)
    start = cda_motion(reference, [8.0, 8.3]).samples[0].realization
    x = re_gauge(start, gauge).as_array(order)

    for e_mid in np.linspace(0.75, abs(params.e), steps + 1)[1:]:
        mid = cda_params_from_e(float(e_mid))
        corrected = newton_correct(g, cda_lengths(mid), x, gauge, newton_tol, 40)
        if corrected is None:
            raise StepFailureError(
                f"parameter homotopy stalled at e={e_mid:.4f}; use more steps"
            )
        x = corrected

    rho = SphericalRealization.from_array(order, x)
    pts = {v: rho.point(v).copy() for v in order}
    if params.e < 0:
        pts[6] = -pts[6]
    if params.a < 0:
        pts[1] = -pts[1]
        pts[3] = -pts[3]
    return SphericalRealization(pts)


# ---------------------------------------------------------------------------
# fibers of circle intersections
# ---------------------------------------------------------------------------


def fiber_count(
    g: Graph,
    lam: LengthAssignment,
    placed: dict[int, Vec],
    free_vertex: int,
    tol: float = 1e-9,
) -> int:
    """Number of placements of one vertex meeting all its placed neighbors.

    Each placed neighbor confines the vertex to a circle on the sphere;
    intersecting them is a linear solve plus one quadratic, giving 0, 1
    (tangency) or 2 positions.
    """
    neighbors = [w for w in g.neighbors(free_vertex) if w in placed]
    if len(neighbors) < 2:
        raise UnderConstrainedError("free vertex needs at least two placed neighbors")
    n_mat = np.stack([np.asarray(placed[w], dtype=float) for w in neighbors])
    rhs = np.array([lam.delta_of(free_vertex, w) / 1.0 for w in neighbors])
    # delta constraint: <x, n> = delta
    u, svals, vt = np.linalg.svd(n_mat, full_matrices=True)
    rank = int(np.sum(svals > 1e-10 * max(svals[0], 1.0)))
    if rank < 2:
        raise UnderConstrainedError("placed neighbors span less than a plane")
    x0 = np.zeros(3)
    for i in range(rank):
        x0 += (u[:, i] @ rhs) / svals[i] * vt[i]
    if np.abs(n_mat @ x0 - rhs).max() > tol:
        return 0
    if rank == 3:
        return 1 if abs(x0 @ x0 - 1.0) <= 2 * tol else 0
    w = vt[-1]
    t_sq = 1.0 - float(x0 @ x0)
    if t_sq > tol:
        return 2
    if t_sq >= -tol:
        return 1
    return 0


# ---------------------------------------------------------------------------
# empirical degrees of forgetful projections
# ---------------------------------------------------------------------------


def _retained_gram(rho: SphericalRealization, retained: Sequence[int]) -> Vec:
    pts = np.stack([rho.point(v) for v in retained])
    return pts @ pts.T


def _orientation_on(rho: SphericalRealization, triple: Sequence[int]) -> float:
    return float(np.linalg.det(np.stack([rho.point(v) for v in triple])))


def empirical_map_degree(
    traj: MotionTrajectory,
    forgotten: Iterable[int],
    match_tol: float = 1e-8,
    newton_tol: float = 1e-12,
) -> int:
    """Estimate the degree of the projection that forgets some vertices.

    For a handful of target samples the trajectory is scanned for other
    parameter windows whose retained sub-realization matches the target's
    up to rotation; each candidate window is polished back onto the curve
    with the matching enforced, and the polished preimages are counted up
    to essential distinctness of the full realization.  The maximum count
    over the targets is returned.
    """
    samples = traj.realizations()
    if len(samples) < 3:
        raise InsufficientSamplesError("need a densely sampled trajectory")
    forgotten = set(forgotten)
    retained = [v for v in traj.graph.vertices if v not in forgotten]
    if len(retained) < 3:
        raise InsufficientSamplesError("need at least three retained vertices")
    order = _vertex_order(traj.graph)

    target_ids = sorted({0, len(samples) // 3, (2 * len(samples)) // 3})
    best = 1
    for tid in target_ids:
        target = samples[tid]
        g_target = _retained_gram(target, retained)
        triple = None
        for cand in combinations(retained, 3):
            if abs(_orientation_on(target, cand)) > 1e-8:
                triple = cand
                break
        dists = np.array(
            [np.abs(_retained_gram(s, retained) - g_target).max() for s in samples]
        )
        if triple is not None:
            for i, s in enumerate(samples):
                if _orientation_on(s, triple) * _orientation_on(target, triple) < 0:
                    dists[i] = np.inf

        hits = [
            i
            for i in range(len(samples))
            if dists[i] <= 0.25
            and dists[i] <= dists[max(i - 1, 0)]
            and dists[i] <= dists[min(i + 1, len(samples) - 1)]
        ]
        polished: list[Vec] = []
        for i in hits:
            x = _polish_to_match(traj, samples[i], target, retained, order, newton_tol)
            if x is None:
                continue
            rho = SphericalRealization.from_array(order, x)
            if np.abs(_retained_gram(rho, retained) - g_target).max() > match_tol:
                continue
            if all(np.abs(x - y).max() > 1e-6 for y in polished):
                polished.append(x)

        classes: list[SphericalRealization] = []
        for x in polished:
            rho = SphericalRealization.from_array(order, x)
            if all(essentially_distinct(rho, c) for c in classes):
                classes.append(rho)
        best = max(best, len(classes))
    return best


def _polish_to_match(
    traj: MotionTrajectory,
    start: SphericalRealization,
    target: SphericalRealization,
    retained: Sequence[int],
    order: Sequence[int],
    newton_tol: float,
) -> Optional[Vec]:
    """Newton-correct a sample onto the curve point whose retained Gram
    matches the target's.

    One retained Gram entry (the one moving fastest along the curve near
    the start) is appended to the sphere and edge equations; rotations stay
    unconstrained, which is harmless since the match test is
    rotation-invariant.
    """
    g, lam = traj.graph, traj.lengths
    idx = {v: i for i, v in enumerate(order)}
    pairs = list(combinations(retained, 2))

    x = start.as_array(order)
    pts = x.reshape(len(order), 3)
    # pick the retained pair whose delta differs most from the target but is
    # still in the attraction basin; fall back to the largest gradient proxy
    best_pair, best_gap = pairs[0], -1.0
    for a, b in pairs:
        gap = abs(
            float(pts[idx[a]] @ pts[idx[b]])
            - float(target.point(a) @ target.point(b))
        )
        if gap > best_gap:
            best_gap = gap
            best_pair = (a, b)
    a, b = best_pair
    goal = float(target.point(a) @ target.point(b))

    def full_residual(vec: Vec) -> Vec:
        pts = vec.reshape(len(order), 3)
        rows = [pts[i] @ pts[i] - 1.0 for i in range(len(order))]
        for ea, eb in g.edges:
            rows.append(
                0.5 * (1.0 - pts[idx[ea]] @ pts[idx[eb]]) - lam.length(ea, eb)
            )
        rows.append(pts[idx[a]] @ pts[idx[b]] - goal)
        return np.array(rows)

    def full_jacobian(vec: Vec) -> Vec:
        pts = vec.reshape(len(order), 3)
        n = len(order)
        jac = np.zeros((n + g.num_edges + 1, 3 * n))
        for i in range(n):
            jac[i, 3 * i : 3 * i + 3] = 2.0 * pts[i]
        for r, (ea, eb) in enumerate(g.edges, start=n):
            ia, ib = idx[ea], idx[eb]
            jac[r, 3 * ia : 3 * ia + 3] = -0.5 * pts[ib]
            jac[r, 3 * ib : 3 * ib + 3] = -0.5 * pts[ia]
        ia, ib = idx[a], idx[b]
        jac[-1, 3 * ia : 3 * ia + 3] = pts[ib]
        jac[-1, 3 * ib : 3 * ib + 3] = pts[ia]
        return jac

    for _ in range(50):
        r = full_residual(x)
        if np.abs(r).max() <= newton_tol:
            return x
        step, *_ = np.linalg.lstsq(full_jacobian(x), -r, rcond=None)
        x = x + step
        if not np.all(np.isfinite(x)):
            return None
    r = full_residual(x)
    return x if np.abs(r).max() <= newton_tol else None
