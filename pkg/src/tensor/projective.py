"""
Projective Tensor Norm
LP over bilinear forms bounded by one on pairs of extreme points
"""
import logging
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.core.errors import NumericalError, OutOfDimension, SizeLimit
from src.core.space import ProjTensor
from src.core.vector import SparseVector
from src.lp.simplex import LinearProgram, LpStatus, Relation, solve
from src.polytope.vball import VBall

logger = logging.getLogger(__name__)

MAX_ENTRIES = 36


def elementary(u: SparseVector, v: SparseVector, shape: Tuple[int, int]) -> np.ndarray:
    """The n x m matrix u (x) v."""
    n, m = shape
    return np.outer(u.to_dense(n), v.to_dense(m))


def to_matrix(space: ProjTensor, x: SparseVector) -> np.ndarray:
    """Row-major reshape of a coordinate vector of the tensor space."""
    if x.max_index() > space.dim:
        raise OutOfDimension(f"Vector exceeds tensor dimension {space.dim}")
    return x.to_dense(space.dim).reshape(space.shape)


def from_matrix(z: np.ndarray) -> SparseVector:
    return SparseVector.from_dense(np.asarray(z, dtype=float).ravel())


def _extreme_pairs(X: VBall, Y: VBall) -> Iterable[Tuple[np.ndarray, np.ndarray]]:
    xs = [u.to_dense(X.dim) for u in X.extreme_points()]
    ys = [v.to_dense(Y.dim) for v in Y.extreme_points()]
    return [(u, v) for u in xs for v in ys]


def proj_norm(X: VBall, Y: VBall, z: np.ndarray) -> float:
    """
    Projective norm of z in X (x)_pi Y for polytope factors.

    Equals max <B, z> over matrices B with B(u, v) <= 1 on every pair of
    extreme points (both factor lists are negation-closed).

    Raises:
        SizeLimit: if n * m exceeds MAX_ENTRIES
    """
    z = np.asarray(z, dtype=float)
    n, m = X.dim, Y.dim
    if z.shape != (n, m):
        raise OutOfDimension(f"Matrix shape {z.shape} does not match factors ({n}, {m})")
    if n * m > MAX_ENTRIES:
        raise SizeLimit(f"Tensor with {n * m} entries exceeds cap {MAX_ENTRIES}")
    if not z.any():
        return 0.0
    lp = LinearProgram(objective=z.ravel(), bounds=[(None, None)] * (n * m))
    for u, v in _extreme_pairs(X, Y):
        lp.add_constraint(np.outer(u, v).ravel(), Relation.LE, 1.0)
    result = solve(lp)
    if result.status != LpStatus.OPTIMAL:
        raise NumericalError(f"Projective norm LP returned {result.status.value}")
    return max(0.0, result.value)


def bilinear_norm(X: VBall, Y: VBall, B: np.ndarray) -> float:
    """max |B(u, v)| over extreme pairs, the operator norm of a bilinear form."""
    return max(abs(float(u @ B @ v)) for u, v in _extreme_pairs(X, Y))


def tensor_ball(X: VBall, Y: VBall) -> VBall:
    """The projective unit ball conv{u (x) v : u, v extreme}, flattened row-major."""
    generators: List[SparseVector] = []
    for u, v in _extreme_pairs(X, Y):
        t = from_matrix(np.outer(u, v))
        if not any(t.allclose(g) for g in generators):
            generators.append(t)
    return VBall(generators, X.dim * Y.dim)


def decomposition_upper_bound(X: VBall, Y: VBall, terms: Sequence[Tuple[float, SparseVector, SparseVector]],
                              z: np.ndarray) -> float:
    """
    Sum of |c_i| for an explicit decomposition z = sum c_i u_i (x) v_i.

    Raises:
        ValueError: if the terms do not reproduce z
    """
    total = np.zeros((X.dim, Y.dim))
    for c, u, v in terms:
        total += c * elementary(u, v, (X.dim, Y.dim))
    if not np.allclose(total, z, atol=1e-9):
        raise ValueError("Decomposition does not reproduce the tensor")
    return float(sum(abs(c) for c, _, _ in terms))
