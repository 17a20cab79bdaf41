"""
Corner Renorming
Renorms a space as Y (+)_1 R so that the new last unit vector becomes a nabla-point
"""
import logging

from src.core.errors import InvalidDescriptor, NotPolyhedral
from src.core.space import AbsoluteSum, Lp, PolytopeV, SpaceDescriptor, l1, real_line
from src.core.vector import SparseVector

logger = logging.getLogger(__name__)


def restrict_tail(space: SpaceDescriptor) -> SpaceDescriptor:
    """
    The subspace on coordinates 2..dim, re-indexed from 1, with the induced norm.

    For l_p this is l_p^{dim-1}. For a polytope the section is computed through
    polarity: the section's dual ball is the hull of the restricted facet normals.
    """
    if isinstance(space, Lp):
        return Lp(space.p, space.dim - 1)
    from src.polytope.realize import to_vball
    from src.polytope.vball import VBall
    try:
        ball = to_vball(space)
    except NotPolyhedral as e:
        raise InvalidDescriptor(f"Cannot restrict {space!r}: {e}") from e
    restricted = [f.restrict(lambda i: i > 1).shift(-1) for f in ball.facet_normals()]
    restricted = [f for f in restricted if not f.is_zero()]
    dual_ball = VBall(restricted, space.dim - 1)
    return PolytopeV(tuple(dual_ball.facet_normals()), space.dim - 1)


def corner_renorm(space: SpaceDescriptor) -> AbsoluteSum:
    """
    Build Y (+)_1 R with Y the restriction of the input to its last dim-1 coordinates.

    Raises:
        InvalidDescriptor: for dim < 2 or inputs with no computable restriction
    """
    if space.dim < 2:
        raise InvalidDescriptor(f"corner_renorm needs dim >= 2, got {space.dim}")
    tail = restrict_tail(space)
    logger.info(f"Corner renorming of dim {space.dim}: tail of dim {tail.dim}")
    return AbsoluteSum(l1(2), tail, real_line())


def corner_point(space: AbsoluteSum) -> SparseVector:
    """The unit vector on the appended R coordinate."""
    return SparseVector.basis(space.dim)
