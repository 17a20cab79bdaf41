"""
Sum Ball Vertex Model
V-representation of X (+)_N Y for polyhedral parts and polyhedral N
"""
import logging
from typing import List, Tuple

from src.core.errors import NotPolyhedral
from src.core.pnorm import INF
from src.core.space import AbsoluteSum, Lp, PolytopeV
from src.core.vector import TOL, SparseVector

logger = logging.getLogger(__name__)


def quadrant_vertices(space: AbsoluteSum) -> List[Tuple[float, float]]:
    """Vertices (a, b) != 0 of B_N in the closed positive quadrant."""
    n2 = space.norm2d
    if isinstance(n2, Lp):
        if n2.p == 1:
            return [(1.0, 0.0), (0.0, 1.0)]
        if n2.p == INF:
            return [(1.0, 1.0), (1.0, 0.0), (0.0, 1.0)]
        raise NotPolyhedral(f"N = l_{n2.p:g} has no finite vertex model")
    if isinstance(n2, PolytopeV):
        from src.polytope.realize import to_vball
        out = [(e.get(1), e.get(2)) for e in to_vball(n2).extreme_points()
               if e.get(1) >= -TOL and e.get(2) >= -TOL]
        for axis in ((1.0, 0.0), (0.0, 1.0)):
            if not any(abs(a - axis[0]) <= TOL and abs(b - axis[1]) <= TOL for a, b in out):
                out.append(axis)
        return [(max(a, 0.0), max(b, 0.0)) for a, b in out]
    raise NotPolyhedral(f"N = {n2!r} has no finite vertex model")


def sum_generators(space: AbsoluteSum) -> List[SparseVector]:
    """Points (a u, b v) over quadrant vertices (a, b) and extreme points u, v of the parts."""
    from src.polytope.realize import to_vball
    left = to_vball(space.left).extreme_points()
    right = to_vball(space.right).extreme_points()
    shift = space.left.dim
    generators: List[SparseVector] = []
    for a, b in quadrant_vertices(space):
        if b <= TOL:
            generators.extend(u * a for u in left)
        elif a <= TOL:
            generators.extend((v * b).shift(shift) for v in right)
        else:
            generators.extend(u * a + (v * b).shift(shift) for u in left for v in right)
    return generators


def sum_ball(space: AbsoluteSum):
    """
    VBall of the sum, reduced to its extreme points.

    Raises:
        NotPolyhedral: if N or a part is not polyhedral
    """
    from src.polytope.vball import VBall
    raw = VBall(sum_generators(space), space.dim)
    extremes = raw.extreme_points()
    logger.debug(f"Sum ball of dim {space.dim}: {len(raw.generators)} generators, {len(extremes)} extreme")
    return VBall(extremes, space.dim, extremes_known=True)
