"""
Ball Realization
Turns polyhedral space descriptors into VBall instances
"""
import functools
import itertools
import logging
from typing import List

from src.core.errors import NotPolyhedral, SizeLimit
from src.core.pnorm import INF
from src.core.space import AbsoluteSum, Lp, PolytopeV, ProjTensor, Renormed, SpaceDescriptor
from src.core.vector import SparseVector
from src.polytope.vball import VBall

logger = logging.getLogger(__name__)

# 2^12 cube vertices is the largest generator list the LP caps accept.
MAX_CUBE_DIM = 12


def sign_vectors(dim: int) -> List[SparseVector]:
    """All (+-1, ..., +-1) vectors, in itertools.product order starting at all +1."""
    return [SparseVector.from_dense(signs) for signs in itertools.product((1.0, -1.0), repeat=dim)]


def signed_basis(dim: int) -> List[SparseVector]:
    """[e1, -e1, e2, -e2, ...]."""
    out = []
    for i in range(1, dim + 1):
        out.append(SparseVector.basis(i))
        out.append(SparseVector.basis(i, -1.0))
    return out


def l1_ball(dim: int) -> VBall:
    return VBall(signed_basis(dim), dim, facet_factory=lambda: sign_vectors(dim), extremes_known=True)


def linf_ball(dim: int) -> VBall:
    if dim > MAX_CUBE_DIM:
        raise SizeLimit(f"l_inf^{dim} has too many vertices (cap dim {MAX_CUBE_DIM})")
    return VBall(sign_vectors(dim), dim, facet_factory=lambda: signed_basis(dim), extremes_known=True)


def is_polyhedral(space: SpaceDescriptor) -> bool:
    """True when the unit ball of the descriptor has a finite vertex list."""
    if isinstance(space, Lp):
        return space.dim == 1 or space.p in (1, INF)
    if isinstance(space, PolytopeV):
        return True
    if isinstance(space, Renormed):
        return space.base.p in (1, INF)
    if isinstance(space, AbsoluteSum):
        return all(is_polyhedral(s) for s in (space.norm2d, space.left, space.right))
    if isinstance(space, ProjTensor):
        return is_polyhedral(space.left) and is_polyhedral(space.right)
    return False


@functools.lru_cache(maxsize=128)
def to_vball(space: SpaceDescriptor) -> VBall:
    """
    Realize a polyhedral descriptor as a V-represented ball.

    Raises:
        NotPolyhedral: if the ball has no finite vertex list
    """
    if isinstance(space, Lp):
        if space.dim == 1 or space.p == 1:
            return l1_ball(space.dim)
        if space.p == INF:
            return linf_ball(space.dim)
    elif isinstance(space, PolytopeV):
        return VBall(space.generators, space.dim)
    elif isinstance(space, Renormed):
        if space.base.p in (1, INF):
            from src.renorm.formulas import renorm_generators
            return renorm_generators(space)
    elif isinstance(space, AbsoluteSum):
        if is_polyhedral(space):
            from src.sums.ball import sum_ball
            return sum_ball(space)
    elif isinstance(space, ProjTensor):
        if is_polyhedral(space):
            from src.tensor.projective import tensor_ball
            return tensor_ball(to_vball(space.left), to_vball(space.right))
    raise NotPolyhedral(f"{space!r} has no finite vertex description")
