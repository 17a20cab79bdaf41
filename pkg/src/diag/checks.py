"""
Diametral Checks
Nabla, DPoint, Delta, Daugavet and strong-exposure diagnostics with explicit witnesses
"""
import itertools
import logging
from typing import List, Optional, Sequence

import numpy as np

from src.core.errors import NotOnSphere, SearchExhausted
from src.core.norms import norm
from src.core.space import Renormed, SliceSpec, SpaceDescriptor
from src.core.vector import TOL, SparseVector, pairing
from src.diag.denting import nearest_denting
from src.diag.report import Certificate, DiagnosticReport, Property, Verdict, Witness
from src.diag.slices import slice_sup, slice_sup_bound
from src.polytope.realize import is_polyhedral, to_vball
from src.renorm.formulas import norming_functionals, supporting_grid

logger = logging.getLogger(__name__)

DEFAULT_EPS = 1e-6
DEFAULT_ALPHAS = (0.5, 0.25, 0.1, 0.01)
DEFAULT_MIDPOINT_CAP = 12
DEFAULT_FIND_SAMPLES = 200
DEFAULT_FIND_SEED = 2024


def _require_sphere(space: SpaceDescriptor, x: SparseVector) -> None:
    value = norm(space, x)
    if abs(value - 1.0) > TOL:
        raise NotOnSphere(f"||x|| = {value:.12g}, expected 1")


def _clip(deficiency: float) -> float:
    return 0.0 if deficiency <= TOL else deficiency


def nabla_check(space: SpaceDescriptor, x: SparseVector, eps: float = DEFAULT_EPS) -> DiagnosticReport:
    """
    Nabla test through the denting-point characterization:
    x is a nabla-point iff ||x - v|| >= 2 - eps for every extreme v != x.

    Args:
        space: Space descriptor
        x: Unit vector
        eps: Holds threshold

    Returns:
        Holds (exact sweep), Fails with the nearest extreme point, or
        LowerBoundOnly when the extreme family was only sampled

    Raises:
        NotOnSphere: if |norm(x) - 1| > TOL
    """
    _require_sphere(space, x)
    search = nearest_denting(space, x)
    deficiency = _clip(2.0 - search.distance)
    params = {"eps": eps, "sweep_size": search.sweep_size, "exact": search.exact}
    certificate = Certificate(point=x)
    certificate.add("distance", search.witness, search.distance)
    witness = Witness("vector", search.witness, search.distance)
    if search.distance < 2.0 - eps:
        verdict = Verdict.FAILS
    elif search.exact:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.LOWER_BOUND_ONLY
        logger.warning(f"Sampled denting search on {space!r}: nabla reported as a lower bound only")
    logger.debug(f"nabla_check: min distance {search.distance:.12g}, verdict {verdict.value}")
    return DiagnosticReport(Property.NABLA, verdict, deficiency, witness, params, certificate)


def is_nabla(space: SpaceDescriptor, x: SparseVector, eps: float = DEFAULT_EPS) -> bool:
    """Nabla predicate that is False off the unit sphere."""
    if abs(norm(space, x) - 1.0) > TOL:
        return False
    return nabla_check(space, x, eps).holds


def supporting_functionals(space: SpaceDescriptor, x: SparseVector) -> List[SparseVector]:
    """
    Vertex skeleton of D(x): facet normals f with f(x) = 1.

    For the renorming of a smooth base D(x) is not finite; the closed-form
    norming functionals of x stand in for it, with the supporting grid at +-e1.
    """
    if isinstance(space, Renormed) and not is_polyhedral(space):
        grid = supporting_grid(space)
        found: List[SparseVector] = []
        for f in norming_functionals(space, x) + grid + [-g for g in grid]:
            if abs(pairing(f, x) - 1.0) <= TOL and not any(f.allclose(g) for g in found):
                found.append(f)
        return found
    return [f for f in to_vball(space).facet_normals() if abs(pairing(f, x) - 1.0) <= TOL]


def _face_candidates(vertices: Sequence[SparseVector], midpoint_cap: int,
                     barycenter_first: bool) -> List[SparseVector]:
    candidates: List[SparseVector] = []
    barycenter = None
    if len(vertices) > 1:
        total = SparseVector()
        for f in vertices:
            total = total + f
        barycenter = total / len(vertices)
    if barycenter_first and barycenter is not None:
        candidates.append(barycenter)
    candidates.extend(vertices)
    if len(vertices) <= midpoint_cap:
        candidates.extend((f + g) * 0.5 for f, g in itertools.combinations(vertices, 2))
    if not barycenter_first and barycenter is not None:
        candidates.append(barycenter)
    unique: List[SparseVector] = []
    for c in candidates:
        if not any(c.allclose(u) for u in unique):
            unique.append(c)
    return unique


def strongly_exposed_check(space: SpaceDescriptor, x: SparseVector,
                           midpoint_cap: int = DEFAULT_MIDPOINT_CAP) -> DiagnosticReport:
    """
    Strong exposure of x in a polytope: some f in D(x) with f(v) <= 1 - margin
    for every other extreme point v, margin > TOL.

    Candidates are the vertices of D(x), their midpoints and their barycenter.
    """
    _require_sphere(space, x)
    ball = to_vball(space)
    others = [v for v in ball.extreme_points() if not v.allclose(x)]
    best_f: Optional[SparseVector] = None
    best_margin = float("-inf")
    tested = 0
    for f in _face_candidates(supporting_functionals(space, x), midpoint_cap, barycenter_first=False):
        tested += 1
        margin = 1.0 - max(pairing(f, v) for v in others)
        if margin > best_margin + TOL:
            best_f, best_margin = f, margin
    certificate = Certificate(point=x)
    certificate.add("pairing", best_f, 1.0)
    certificate.add("margin", best_f, best_margin)
    verdict = Verdict.HOLDS if best_margin > TOL else Verdict.FAILS
    deficiency = max(0.0, -best_margin) if verdict == Verdict.FAILS else 0.0
    params = {"functionals_tested": tested, "extreme_points": len(others) + 1}
    return DiagnosticReport(
        Property.STRONGLY_EXPOSED, verdict, deficiency,
        Witness("functional", best_f, best_margin), params, certificate,
    )


def dpoint_deficiency(space: SpaceDescriptor, x: SparseVector, alpha: float,
                      midpoint_cap: int = DEFAULT_MIDPOINT_CAP) -> DiagnosticReport:
    """
    DPoint surrogate: deficiency 2 - min over tested f in D(x) of slice_sup(x, S(f, alpha)).

    Tested functionals: barycenter of D(x), its vertices, then pairwise midpoints.
    Any f with an exact slice_sup < 2 - TOL is a genuine refutation (Fails).
    Otherwise the verdict is Holds only when D(x) is a single functional.
    Sampled slice diameters (renorming of a smooth base) only bound the
    diameter from below, so the verdict there is LowerBoundOnly.
    """
    _require_sphere(space, x)
    vertices = supporting_functionals(space, x)
    if not vertices:
        raise SearchExhausted(f"No supporting functional found at {x}")
    candidates = _face_candidates(vertices, midpoint_cap, barycenter_first=True)
    best_f: Optional[SparseVector] = None
    best_value = float("inf")
    exact = True
    for f in candidates:
        value, exact_value = slice_sup_bound(space, x, SliceSpec(f, alpha))
        exact = exact and exact_value
        if value < best_value - TOL:
            best_f, best_value = f, value
    certificate = Certificate(point=x)
    certificate.add("slice_sup", best_f, best_value, alpha)
    if not exact:
        verdict = Verdict.LOWER_BOUND_ONLY
        logger.warning(f"Sampled slice diameters on {space!r}: DPoint reported as a lower bound only")
    elif best_value < 2.0 - TOL:
        verdict = Verdict.FAILS
    elif len(vertices) == 1:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.LOWER_BOUND_ONLY
    params = {
        "alpha": alpha,
        "face_vertices": len(vertices),
        "functionals_tested": len(candidates),
        "exact": exact,
    }
    return DiagnosticReport(
        Property.DPOINT, verdict, _clip(2.0 - best_value),
        Witness("functional", best_f, best_value, alpha), params, certificate,
    )


def delta_deficiency(space: SpaceDescriptor, x: SparseVector, alpha: float) -> DiagnosticReport:
    """
    Delta-point surrogate: 2 - min of the slice diameter at x over facet-normal
    slices S(f, alpha) that contain x.
    """
    _require_sphere(space, x)
    best_f: Optional[SparseVector] = None
    best_value = float("inf")
    tested = 0
    for f in to_vball(space).facet_normals():
        if pairing(f, x) < 1.0 - alpha:
            continue
        tested += 1
        value = slice_sup(space, x, SliceSpec(f, alpha))
        if value < best_value - TOL:
            best_f, best_value = f, value
    if best_f is None:
        raise SearchExhausted("No facet slice contains x")
    certificate = Certificate(point=x)
    certificate.add("slice_sup", best_f, best_value, alpha)
    verdict = Verdict.FAILS if best_value < 2.0 - TOL else Verdict.LOWER_BOUND_ONLY
    return DiagnosticReport(
        Property.DELTA_DEFICIENCY, verdict, _clip(2.0 - best_value),
        Witness("functional", best_f, best_value, alpha),
        {"alpha": alpha, "functionals_tested": tested}, certificate,
    )


def daugavet_check(space: SpaceDescriptor, x: SparseVector, alpha: float,
                   eps: float = DEFAULT_EPS,
                   midpoint_cap: int = DEFAULT_MIDPOINT_CAP) -> DiagnosticReport:
    """
    A Daugavet point is both a nabla-point and a DPoint: Fails when either side
    fails, and never Holds in finite dimension (LowerBoundOnly otherwise).
    """
    nabla = nabla_check(space, x, eps)
    dpoint = dpoint_deficiency(space, x, alpha, midpoint_cap)
    if nabla.fails:
        verdict, witness, side = Verdict.FAILS, nabla.witness, "nabla"
    elif dpoint.fails:
        verdict, witness, side = Verdict.FAILS, dpoint.witness, "dpoint"
    else:
        verdict, witness, side = Verdict.LOWER_BOUND_ONLY, None, None
    params = {
        "alpha": alpha,
        "eps": eps,
        "failed_side": side,
        "nabla_deficiency": nabla.deficiency,
        "dpoint_deficiency": dpoint.deficiency,
    }
    return DiagnosticReport(
        Property.DAUGAVET, verdict, max(nabla.deficiency, dpoint.deficiency),
        witness, params, sub_reports=[nabla, dpoint],
    )


def find_non_nabla(space: SpaceDescriptor, samples: int = DEFAULT_FIND_SAMPLES,
                   seed: int = DEFAULT_FIND_SEED, eps: float = DEFAULT_EPS) -> SparseVector:
    """
    A unit-sphere point that fails nabla_check.

    Midpoints of extreme pairs lying on the sphere are tried first, in extreme
    order, then seeded random sphere points.

    Raises:
        SearchExhausted: if no candidate fails
    """
    extremes = to_vball(space).extreme_points()
    for u, w in itertools.combinations(extremes, 2):
        if (u + w).norm_inf() <= TOL:
            continue
        mid = (u + w) * 0.5
        if abs(norm(space, mid) - 1.0) > TOL:
            continue
        if nabla_check(space, mid, eps).fails:
            return mid
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        v = SparseVector.from_dense(rng.standard_normal(space.dim))
        size = norm(space, v)
        if size <= TOL:
            continue
        point = v / size
        if nabla_check(space, point, eps).fails:
            return point
    raise SearchExhausted(f"No non-nabla point among {samples} samples")


def batch_reports(space: SpaceDescriptor, points: Sequence[SparseVector],
                  alphas: Sequence[float] = DEFAULT_ALPHAS,
                  eps: float = DEFAULT_EPS) -> List[DiagnosticReport]:
    """Daugavet reports over a (point, alpha) grid, ordered by point then alpha."""
    return [daugavet_check(space, x, alpha, eps) for x in points for alpha in alphas]
