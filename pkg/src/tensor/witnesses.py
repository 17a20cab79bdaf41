"""
Tensor Witnesses
Distances from elementary tensors to denting points, and the two-slice refinement
"""
import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from src.core.errors import NotOnSphere
from src.core.space import SliceSpec
from src.core.vector import TOL, SparseVector, pairing
from src.polytope.vball import VBall
from src.tensor.projective import bilinear_norm, elementary, proj_norm

logger = logging.getLogger(__name__)


def _require_unit(ball: VBall, x: SparseVector, name: str) -> None:
    value = ball.gauge(x)
    if abs(value - 1.0) > TOL:
        raise NotOnSphere(f"{name} has norm {value:.12g}, expected 1")


def tensor_denting_distance(X: VBall, Y: VBall, x: SparseVector, y: SparseVector,
                            u: SparseVector, v: SparseVector) -> float:
    """proj_norm(x (x) y - u (x) v) for unit x, y and extreme u, v."""
    _require_unit(X, x, "x")
    _require_unit(Y, y, "y")
    shape = (X.dim, Y.dim)
    return proj_norm(X, Y, elementary(x, y, shape) - elementary(u, v, shape))


@dataclass(frozen=True)
class TwoSliceWitness:
    """Outcome of the two-stage slice refinement."""
    w: np.ndarray
    in_slice: bool
    dist: float
    case: str
    eps: float
    lower_bound: float
    value: float


def _slice_points(ball: VBall, functional: SparseVector, depth: float) -> List[SparseVector]:
    """
    Vertices of the closed slice {u : g(u) >= sup g - depth}, g = functional:
    extreme points inside it plus LP optima for +-facet-normal objectives.
    """
    top = ball.support(functional)
    spec = SliceSpec(functional / top, depth / top)
    level = spec.level
    points = [e for e in ball.extreme_points() if pairing(spec.functional, e) >= level - TOL]
    for g in ball.facet_normals():
        for objective in (g, -g):
            candidate = ball.slice_max_linear(spec, objective).argmax
            if not any(candidate.allclose(p) for p in points):
                points.append(candidate)
    return points


def two_slice_witness(X: VBall, Y: VBall, x: SparseVector, y: SparseVector,
                      B: np.ndarray, alpha: float) -> TwoSliceWitness:
    """
    Two-stage slice refinement for the functional B on X (x)_pi Y.

    Normalize B over extreme pairs and take a maximizing pair (x0, y0). Slice
    S1 of B(., y0) at depth alpha/4 yields u1, the point farthest from +-x.
    Slice S2 of B(u1, .) at depth alpha/4 then decides the case: if y is in
    S2 the witness is u1 (x) y, otherwise u1 (x) v2 with v2 in S2 farthest from y.

    Returns:
        TwoSliceWitness with B(w) >= 1 - alpha/2 and dist = proj_norm(x (x) y - w)
    """
    _require_unit(X, x, "x")
    _require_unit(Y, y, "y")
    B = np.asarray(B, dtype=float)
    B = B / bilinear_norm(X, Y, B)
    shape = (X.dim, Y.dim)
    xs, ys = X.extreme_points(), Y.extreme_points()
    best = max(
        ((float(u.to_dense(X.dim) @ B @ v.to_dense(Y.dim)), i, j)
         for i, u in enumerate(xs) for j, v in enumerate(ys)),
        key=lambda t: (t[0], -t[1], -t[2]),
    )
    y0 = ys[best[2]]
    depth = alpha / 4.0

    g1 = SparseVector.from_dense(B @ y0.to_dense(Y.dim))
    u1, eps1 = None, np.inf
    for u in _slice_points(X, g1, depth):
        spread = min(X.gauge(x - u), X.gauge(x + u))
        if 2.0 - spread < eps1 - TOL:
            u1, eps1 = u, max(0.0, 2.0 - spread)

    u1d = u1.to_dense(X.dim)
    g2 = SparseVector.from_dense(u1d @ B)
    top2 = Y.support(g2)
    if float(u1d @ B @ y.to_dense(Y.dim)) >= top2 - depth - TOL:
        case, partner, eps2 = "a", y, 0.0
    else:
        case, partner, eps2 = "b", None, np.inf
        for v in _slice_points(Y, g2, depth):
            gap = 2.0 - Y.gauge(y - v)
            if gap < eps2 - TOL:
                partner, eps2 = v, max(0.0, gap)

    w = elementary(u1, partner, shape)
    value = float(np.sum(B * w))
    eps = max(eps1, eps2)
    dist = proj_norm(X, Y, elementary(x, y, shape) - w)
    logger.debug(f"two_slice_witness: case {case}, B(w) = {value:.6f}, dist = {dist:.6f}")
    return TwoSliceWitness(
        w=w, in_slice=value > 1.0 - alpha, dist=dist, case=case,
        eps=eps, lower_bound=2.0 * (1.0 - eps) ** 2, value=value,
    )
