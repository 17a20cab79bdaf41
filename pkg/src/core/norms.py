"""
Norm Dispatch
Evaluates the norm of any described space and validates descriptor invariants
"""
import functools
import logging

from src.core.errors import InvalidDescriptor, OutOfDimension
from src.core.pnorm import p_norm
from src.core.space import AbsoluteSum, Lp, PolytopeV, ProjTensor, Renormed, SpaceDescriptor
from src.core.vector import SparseVector

logger = logging.getLogger(__name__)


def check_dimension(space: SpaceDescriptor, x: SparseVector) -> None:
    """Raise OutOfDimension when x is supported outside 1..dim(space)."""
    if x.max_index() > space.dim:
        raise OutOfDimension(
            f"Vector supported on coordinate {x.max_index()} but space has dim {space.dim}"
        )


@functools.lru_cache(maxsize=256)
def validate(space: SpaceDescriptor) -> None:
    """
    Check the invariants that cannot be verified by a descriptor's own constructor.

    Raises:
        InvalidDescriptor: if an AbsoluteSum norm is not absolute and normalized
    """
    if isinstance(space, AbsoluteSum):
        from src.sums.absolute import check_absolute_norm
        validate(space.norm2d)
        validate(space.left)
        validate(space.right)
        if not check_absolute_norm(space.norm2d):
            raise InvalidDescriptor(f"norm2d {space.norm2d} is not absolute and normalized")
    elif isinstance(space, ProjTensor):
        validate(space.left)
        validate(space.right)
    elif not isinstance(space, (Lp, PolytopeV, Renormed)):
        raise InvalidDescriptor(f"Unknown descriptor {space!r}")


def norm(space: SpaceDescriptor, x: SparseVector) -> float:
    """
    Norm of x in the described space.

    Args:
        space: Space descriptor
        x: Vector supported in 1..dim(space)

    Returns:
        Nonnegative norm value

    Raises:
        OutOfDimension: if x has support beyond dim(space)
        InvalidDescriptor: if the descriptor fails its invariants
    """
    check_dimension(space, x)
    validate(space)
    return _evaluate(space, x)


def _evaluate(space: SpaceDescriptor, x: SparseVector) -> float:
    if x.is_zero():
        return 0.0
    if isinstance(space, Lp):
        return p_norm((v for _, v in x.items()), space.p)
    if isinstance(space, PolytopeV):
        from src.polytope.realize import to_vball
        return to_vball(space).gauge(x)
    if isinstance(space, Renormed):
        from src.renorm.formulas import rnorm
        return rnorm(space, x)
    if isinstance(space, AbsoluteSum):
        from src.sums.absolute import SumPoint, sum_norm
        return sum_norm(space, SumPoint.split(x, space.left.dim))
    if isinstance(space, ProjTensor):
        from src.polytope.realize import to_vball
        from src.tensor.projective import proj_norm, to_matrix
        return proj_norm(to_vball(space.left), to_vball(space.right), to_matrix(space, x))
    raise InvalidDescriptor(f"Unknown descriptor {space!r}")


def dual_norm(space: SpaceDescriptor, f: SparseVector) -> float:
    """Norm of a functional in the dual space."""
    check_dimension(space, f)
    validate(space)
    if isinstance(space, Lp):
        from src.core.pnorm import dual_exponent
        return p_norm((v for _, v in f.items()), dual_exponent(space.p))
    if isinstance(space, Renormed):
        from src.renorm.formulas import rnorm_dual
        return rnorm_dual(space, f)
    from src.polytope.realize import to_vball
    return to_vball(space).support(f)
