"""
Nabla Transfer Checks
How nabla-points pass through l_1 and l_inf sums
"""
import logging
from typing import List, Tuple

from src.core.errors import NotOnSphere
from src.core.norms import norm
from src.core.space import AbsoluteSum, SpaceDescriptor, l1, linf
from src.core.vector import TOL, SparseVector
from src.diag.checks import DEFAULT_EPS, is_nabla, nabla_check
from src.diag.report import DiagnosticReport
from src.sums.absolute import SumPoint, sphere_samples

logger = logging.getLogger(__name__)


def is_daugavet(space: SpaceDescriptor, x: SparseVector) -> bool:
    """Finite-dimensional spaces have no Daugavet points."""
    return False


def check_l1_transfer(X: SpaceDescriptor, x: SparseVector, Y: SpaceDescriptor,
                      eps: float = DEFAULT_EPS) -> Tuple[bool, bool]:
    """
    Compare "x is nabla in X" with "(x, 0) is nabla in X (+)_1 Y"; the two agree.

    Raises:
        NotOnSphere: if x is not a unit vector of X
    """
    if abs(norm(X, x) - 1.0) > TOL:
        raise NotOnSphere(f"x must be a unit vector of {X}")
    total = AbsoluteSum(l1(2), X, Y)
    lhs = nabla_check(X, x, eps).holds
    rhs = nabla_check(total, SumPoint(x, SparseVector()).embed(X.dim), eps).holds
    logger.debug(f"l1 transfer: X-side {lhs}, sum-side {rhs}")
    return lhs, rhs


def check_linf_characterization(X: SpaceDescriptor, x: SparseVector, Y: SpaceDescriptor,
                                y: SparseVector, eps: float = DEFAULT_EPS) -> Tuple[bool, bool]:
    """
    (x, y) is nabla in X (+)_inf Y iff x or y is Daugavet, or both are nabla-points.

    Nabla is read as False off the unit sphere.

    Returns:
        (lhs, rhs) with lhs the nabla verdict of (x, y), rhs the characterization
    """
    total = AbsoluteSum(linf(2), X, Y)
    point = SumPoint(x, y).embed(X.dim)
    lhs = is_nabla(total, point, eps)
    rhs = is_daugavet(X, x) or is_daugavet(Y, y) or (is_nabla(X, x, eps) and is_nabla(Y, y, eps))
    return lhs, rhs


def shadow_battery(space: AbsoluteSum, samples: int, seed: int,
                   eps: float = DEFAULT_EPS) -> List[DiagnosticReport]:
    """nabla_check on seeded sphere samples of a sum whose N is neither l_1 nor l_inf."""
    reports = [nabla_check(space, p, eps) for p in sphere_samples(space, samples, seed)]
    failures = sum(1 for r in reports if r.fails)
    logger.info(f"Shadow battery: {failures}/{len(reports)} sampled sphere points refuted")
    return reports
