"""
V-Represented Unit Balls
Gauge, support function, extreme points, facet normals and slice optimization
"""
import itertools
import logging
import threading
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np

from src.core.errors import EmptySlice, InvalidDescriptor, NumericalError, OutOfDimension, SizeLimit
from src.core.space import SliceSpec
from src.core.vector import TOL, SparseVector
from src.lp.simplex import LinearProgram, LpStatus, Relation, solve

logger = logging.getLogger(__name__)

FACET_MAX_DIM = 6
FACET_MAX_EXTREMES = 24
_FACET_CHUNK = 20000


@dataclass(frozen=True)
class SliceMaximum:
    """Optimum of a linear objective over a closed slice."""
    value: float
    argmax: SparseVector
    boundary_active: bool


def _dedupe(vectors: Sequence[SparseVector]) -> List[SparseVector]:
    kept: List[SparseVector] = []
    for v in vectors:
        if not any(v.allclose(k) for k in kept):
            kept.append(v)
    return kept


class VBall:
    """
    Unit ball given as conv(generators), negation-closed with nonempty interior.

    The extreme list and facet-normal list are computed lazily, once, under a
    lock; afterwards every read is lock-free.
    """

    def __init__(self, generators: Sequence[SparseVector], dim: int,
                 facet_factory: Optional[Callable[[], List[SparseVector]]] = None,
                 extremes_known: bool = False):
        """
        Args:
            generators: Negation-closed generator list
            dim: Ambient dimension
            facet_factory: Optional closed-form facet-normal enumerator
            extremes_known: Set when every generator is already extreme
        """
        self.dim = int(dim)
        self.generators = list(generators)
        for g in self.generators:
            if g.max_index() > self.dim:
                raise OutOfDimension(f"Generator {g} exceeds dimension {self.dim}")
        self._points = np.array([g.to_dense(self.dim) for g in self.generators]).reshape(-1, self.dim)
        if np.linalg.matrix_rank(self._points, tol=TOL) < self.dim:
            raise InvalidDescriptor("Ball generators do not span the ambient space")
        self._facet_factory = facet_factory
        self._extremes: Optional[List[SparseVector]] = (
            _dedupe(self.generators) if extremes_known else None
        )
        self._facets: Optional[List[SparseVector]] = None
        self._lock = threading.RLock()

    def __repr__(self) -> str:
        return f"VBall(dim={self.dim}, generators={len(self.generators)})"

    def _dense(self, v: SparseVector) -> np.ndarray:
        if v.max_index() > self.dim:
            raise OutOfDimension(f"Vector {v} exceeds ball dimension {self.dim}")
        return v.to_dense(self.dim)

    def gauge(self, x: SparseVector) -> float:
        """
        Minkowski functional of the ball at x.

        Solved as the LP dual of the convex-coefficient program: maximize f(x)
        over functionals f with f(g) <= 1 on every generator.
        """
        target = self._dense(x)
        if not target.any():
            return 0.0
        lp = LinearProgram(
            objective=target,
            bounds=[(None, None)] * self.dim,
        )
        for g in self._points:
            lp.add_constraint(g, Relation.LE, 1.0)
        result = solve(lp)
        if result.status != LpStatus.OPTIMAL:
            raise NumericalError(f"Gauge LP returned {result.status.value}")
        return max(0.0, result.value)

    def contains(self, x: SparseVector) -> bool:
        return self.gauge(x) <= 1.0 + TOL

    def support(self, f: SparseVector) -> float:
        """Support function h(f) = max of f over the generators."""
        return float(np.max(self._points @ self._dense(f)))

    def extreme_points(self) -> List[SparseVector]:
        """Generators that are not convex combinations of the others, in generator order."""
        if self._extremes is None:
            with self._lock:
                if self._extremes is None:
                    self._extremes = self._reduce()
        return list(self._extremes)

    def _reduce(self) -> List[SparseVector]:
        unique = _dedupe(self.generators)
        dense = [u.to_dense(self.dim) for u in unique]
        kept = []
        for i, g in enumerate(unique):
            others = [h for j, h in enumerate(dense) if j != i]
            if not others or not self._in_hull(dense[i], others):
                kept.append(g)
        logger.debug(f"Reduced {len(self.generators)} generators to {len(kept)} extreme points")
        return kept

    def _in_hull(self, point: np.ndarray, others: List[np.ndarray]) -> bool:
        # Separation LP: maximize f(point) - c with f(h) <= c on the others, f boxed.
        lp = LinearProgram(
            objective=np.append(point, -1.0),
            bounds=[(-1.0, 1.0)] * self.dim + [(None, None)],
        )
        for h in others:
            lp.add_constraint(np.append(h, -1.0), Relation.LE, 0.0)
        result = solve(lp)
        if result.status != LpStatus.OPTIMAL:
            raise NumericalError(f"Separation LP returned {result.status.value}")
        return result.value <= TOL

    def facet_normals(self) -> List[SparseVector]:
        """
        Vertices of the dual ball: functionals f with support 1 whose face spans
        a hyperplane. Negation-closed and complete.

        Raises:
            SizeLimit: above FACET_MAX_DIM or FACET_MAX_EXTREMES without a closed form
        """
        if self._facets is None:
            with self._lock:
                if self._facets is None:
                    if self._facet_factory is not None:
                        self._facets = list(self._facet_factory())
                    else:
                        self._facets = self._enumerate_facets()
        return list(self._facets)

    def _enumerate_facets(self) -> List[SparseVector]:
        if self._extremes is None:
            self._extremes = self._reduce()
        extremes = self._extremes
        if self.dim > FACET_MAX_DIM or len(extremes) > FACET_MAX_EXTREMES:
            raise SizeLimit(
                f"Facet enumeration capped at dim {FACET_MAX_DIM} and "
                f"{FACET_MAX_EXTREMES} extreme points (got {self.dim}, {len(extremes)})"
            )
        points = np.array([e.to_dense(self.dim) for e in extremes])
        d = self.dim
        found: List[np.ndarray] = []
        seen = set()
        combos = itertools.combinations(range(len(points)), d)
        while True:
            chunk = list(itertools.islice(combos, _FACET_CHUNK))
            if not chunk:
                break
            systems = points[np.array(chunk)]
            dets = np.linalg.det(systems)
            systems = systems[np.abs(dets) > 1e-10]
            if systems.size == 0:
                continue
            normals = np.linalg.solve(systems, np.ones((systems.shape[0], d, 1)))[..., 0]
            supports = np.max(normals @ points.T, axis=1)
            for f in normals[supports <= 1.0 + TOL]:
                key = tuple(np.round(f, 7) + 0.0)
                if key not in seen:
                    seen.add(key)
                    found.append(f)
        logger.debug(f"Enumerated {len(found)} facet normals in dim {d}")
        return [SparseVector.from_dense(np.where(np.abs(f) < 1e-12, 0.0, f)) for f in found]

    def slice_max_linear(self, slice_spec: SliceSpec, objective: SparseVector) -> SliceMaximum:
        """
        Maximize a linear objective over the closed slice {y : f(y) >= 1 - alpha}.

        Raises:
            EmptySlice: when the support of f is below the slice level
        """
        f = self._dense(slice_spec.functional)
        level = slice_spec.level
        if self.support(slice_spec.functional) < level - TOL:
            raise EmptySlice(f"Slice level {level} exceeds support of {slice_spec.functional}")
        extremes = self.extreme_points()
        points = np.array([e.to_dense(self.dim) for e in extremes])
        obj = self._dense(objective)
        lp = LinearProgram(objective=points @ obj)
        lp.add_constraint(np.ones(len(extremes)), Relation.EQ, 1.0)
        lp.add_constraint(points @ f, Relation.GE, min(level, float(np.max(points @ f))))
        result = solve(lp)
        if result.status != LpStatus.OPTIMAL:
            raise EmptySlice(f"Slice LP returned {result.status.value}")
        y = result.point @ points
        argmax = SparseVector.from_dense(np.where(np.abs(y) < 1e-13, 0.0, y))
        boundary = abs(float(f @ y) - level) <= TOL
        if boundary:
            logger.debug("Slice optimum attained on the cutting hyperplane")
        return SliceMaximum(value=result.value, argmax=argmax, boundary_active=boundary)
