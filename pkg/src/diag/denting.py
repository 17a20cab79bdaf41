"""
Denting Point Search
Nearest extreme (= denting, in finite dimension) point of a unit ball to a given point
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from src.core.errors import NotPolyhedral, SearchExhausted
from src.core.norms import norm
from src.core.pnorm import INF
from src.core.space import AbsoluteSum, Lp, Renormed, SpaceDescriptor
from src.core.vector import TOL, SparseVector
from src.polytope.realize import is_polyhedral, to_vball

logger = logging.getLogger(__name__)

PERTURBATION = 1e-3
ANGLE_GRID = 8
ANGLE_STEP = 1e-3
RENORM_SAMPLES = 64
RENORM_SEED = 11


@dataclass(frozen=True)
class DentingSearch:
    """
    Closest extreme point found.

    exact means `distance` is the true minimum over the whole extreme set;
    otherwise it is an upper bound achieved by `witness`.
    """
    distance: float
    witness: SparseVector
    exact: bool
    sweep_size: int


def nearest_denting(space: SpaceDescriptor, x: SparseVector, exclude_self: bool = True) -> DentingSearch:
    """
    Minimize ||x - v|| over extreme points v of the unit ball.

    Args:
        space: Space descriptor
        x: Reference point
        exclude_self: Skip v equal to x (TOL identity matching)

    Raises:
        NotPolyhedral: for spaces with no exact or sampled extreme family
    """
    if is_polyhedral(space):
        return _sweep(space, x, to_vball(space).extreme_points(), exclude_self, exact=True)
    if isinstance(space, Lp):
        return _strictly_convex(space, x, exclude_self)
    if isinstance(space, AbsoluteSum):
        if isinstance(space.norm2d, Lp) and space.norm2d.p == 1:
            return _l1_sum(space, x, exclude_self)
        return _sampled_sum(space, x, exclude_self)
    if isinstance(space, Renormed):
        return _sampled_renorm(space, x, exclude_self)
    raise NotPolyhedral(f"No extreme-point search for {space!r}")


def _sweep(space: SpaceDescriptor, x: SparseVector, extremes: Iterable[SparseVector],
           exclude_self: bool, exact: bool) -> DentingSearch:
    best: Optional[SparseVector] = None
    best_distance = math.inf
    count = 0
    for v in extremes:
        count += 1
        if exclude_self and v.allclose(x):
            continue
        d = norm(space, x - v)
        if d < best_distance:
            best, best_distance = v, d
    if best is None:
        raise SearchExhausted("Extreme set has no point other than x")
    return DentingSearch(best_distance, best, exact, count)


def _strictly_convex(space: Lp, x: SparseVector, exclude_self: bool) -> DentingSearch:
    # Every sphere point is extreme, so the nearest one is the radial projection.
    r = norm(space, x)
    if abs(r - 1.0) <= TOL:
        if not exclude_self:
            return DentingSearch(0.0, x, True, 1)
        witness = _nearby_sphere_point(space, x)
        return DentingSearch(norm(space, x - witness), witness, False, 1)
    if r <= TOL:
        return DentingSearch(1.0, SparseVector.basis(1), True, 1)
    return DentingSearch(abs(1.0 - r), x / r, True, 1)


def _nearby_sphere_point(space: Lp, x: SparseVector) -> SparseVector:
    """Another unit vector within about PERTURBATION of x."""
    i = x.support()[0]
    j = 1 if i != 1 else 2
    moved = x + SparseVector.basis(j, PERTURBATION)
    return moved / norm(space, moved)


def _l1_sum(space: AbsoluteSum, x: SparseVector, exclude_self: bool) -> DentingSearch:
    # Extreme points of X (+)_1 Y are (u, 0) and (0, v) with u, v extreme in the parts.
    from src.sums.absolute import SumPoint
    point = SumPoint.split(x, space.left.dim)
    left_norm = norm(space.left, point.left)
    right_norm = norm(space.right, point.right)
    left = nearest_denting(space.left, point.left, exclude_self and point.right.is_zero())
    right = nearest_denting(space.right, point.right, exclude_self and point.left.is_zero())
    via_left = left.distance + right_norm
    via_right = left_norm + right.distance
    exact = left.exact and right.exact
    sweep = left.sweep_size + right.sweep_size
    if via_left <= via_right:
        return DentingSearch(via_left, left.witness, exact, sweep)
    return DentingSearch(via_right, right.witness.shift(space.left.dim), exact, sweep)


def _quadrant_curve(space: AbsoluteSum, theta: float):
    from src.sums.absolute import pair
    c, s = math.cos(theta), math.sin(theta)
    scale = norm(space.norm2d, pair(c, s))
    return c / scale, s / scale


def _sampled_sum(space: AbsoluteSum, x: SparseVector, exclude_self: bool) -> DentingSearch:
    """
    Extreme points (a u, b v) with (a, b) on the quadrant arc of B_N; the arc is
    sampled on a grid plus the angle of x itself and its two neighbours.
    """
    from src.sums.absolute import SumPoint, pair
    if not (is_polyhedral(space.left) and is_polyhedral(space.right)):
        raise NotPolyhedral(f"Sampled sum search needs polyhedral parts, got {space!r}")
    point = SumPoint.split(x, space.left.dim)
    lx, rx = norm(space.left, point.left), norm(space.right, point.right)
    theta0 = math.atan2(rx, lx)
    angles = [k * (math.pi / 2) / ANGLE_GRID for k in range(ANGLE_GRID + 1)]
    angles += [theta0, theta0 - ANGLE_STEP, theta0 + ANGLE_STEP]
    angles = [t for t in angles if 0.0 <= t <= math.pi / 2]
    left = to_vball(space.left).extreme_points()
    right = to_vball(space.right).extreme_points()
    best: Optional[SparseVector] = None
    best_distance = math.inf
    count = 0
    for theta in angles:
        a, b = _quadrant_curve(space, theta)
        dl = np.array([norm(space.left, point.left - u * a) for u in left])
        dr = np.array([norm(space.right, point.right - v * b) for v in right])
        for i in np.argsort(dl, kind="stable"):
            for j in np.argsort(dr, kind="stable"):
                count += 1
                d = norm(space.norm2d, pair(dl[i], dr[j]))
                if exclude_self and d <= TOL:
                    continue
                if d < best_distance:
                    best_distance = d
                    best = SumPoint(left[i] * a, right[j] * b).embed(space.left.dim)
                break
    if best is None:
        raise SearchExhausted("Sampled sum search found no candidate")
    return DentingSearch(best_distance, best, False, count)


def renorm_family(space: Renormed, x: SparseVector) -> List[SparseVector]:
    """Sampled extreme family of the renormed ball plus candidates aligned with x."""
    from src.renorm.formulas import E1, base_norm, extreme_samples
    from src.core.vector import split_parts
    family: List[SparseVector] = extreme_samples(space, RENORM_SAMPLES, RENORM_SEED)
    _, plus, minus = split_parts(x)
    for part in (plus, minus):
        size = base_norm(space, part)
        if size > TOL:
            v = E1 + part * (2.0 / size)
            family.extend([v, -v])
    return family


def _sampled_renorm(space: Renormed, x: SparseVector, exclude_self: bool) -> DentingSearch:
    return _sweep(space, x, renorm_family(space, x), exclude_self, exact=False)
