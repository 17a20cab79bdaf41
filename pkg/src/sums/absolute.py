"""
Absolute Sums
Points of X (+)_N Y and the norm N(||x||, ||y||)
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from src.core.errors import OutOfDimension
from src.core.space import AbsoluteSum, SpaceDescriptor
from src.core.vector import TOL, SparseVector

logger = logging.getLogger(__name__)

ABSOLUTE_SAMPLES = 64
ABSOLUTE_SEED = 7


@dataclass(frozen=True)
class SumPoint:
    """A pair (x, y); y is stored with its own 1-based coordinates."""
    left: SparseVector
    right: SparseVector

    def embed(self, left_dim: int) -> SparseVector:
        """Single vector with y shifted past the left block."""
        if self.left.max_index() > left_dim:
            raise OutOfDimension(f"Left component exceeds dim {left_dim}")
        return self.left + self.right.shift(left_dim)

    @classmethod
    def split(cls, vector: SparseVector, left_dim: int) -> "SumPoint":
        left = vector.restrict(lambda i: i <= left_dim)
        right = vector.restrict(lambda i: i > left_dim).shift(-left_dim)
        return cls(left, right)


def pair(a: float, b: float) -> SparseVector:
    return SparseVector({1: a, 2: b})


def sum_norm(space: AbsoluteSum, point: SumPoint) -> float:
    """||(x, y)|| = N(||x||_X, ||y||_Y)."""
    from src.core.norms import norm
    if point.left.max_index() > space.left.dim or point.right.max_index() > space.right.dim:
        raise OutOfDimension(f"Sum point {point} exceeds component dimensions")
    return norm(space.norm2d, pair(norm(space.left, point.left), norm(space.right, point.right)))


def check_absolute_norm(norm2d: SpaceDescriptor, samples: int = ABSOLUTE_SAMPLES,
                        seed: int = ABSOLUTE_SEED) -> bool:
    """
    Sampled check that N(a, b) = N(|a|, |b|) and N(1, 0) = N(0, 1) = 1.
    """
    from src.core.norms import norm
    if abs(norm(norm2d, pair(1.0, 0.0)) - 1.0) > TOL or abs(norm(norm2d, pair(0.0, 1.0)) - 1.0) > TOL:
        logger.warning(f"{norm2d} is not normalized")
        return False
    rng = np.random.default_rng(seed)
    for a, b in rng.standard_normal((samples, 2)):
        reference = norm(norm2d, pair(abs(a), abs(b)))
        for sa, sb in ((1, -1), (-1, 1), (-1, -1)):
            if not math.isclose(norm(norm2d, pair(sa * a, sb * b)), reference, rel_tol=1e-9, abs_tol=TOL):
                logger.warning(f"{norm2d} is not absolute at ({a:.3f}, {b:.3f})")
                return False
    return True


def sphere_samples(space: AbsoluteSum, count: int, seed: int):
    """Random unit-sphere points of the sum, deterministic in seed."""
    from src.core.norms import norm
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        raw = rng.standard_normal(space.dim)
        v = SparseVector.from_dense(raw)
        size = norm(space, v)
        if size > TOL:
            points.append(v / size)
    return points
