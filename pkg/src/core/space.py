"""
Space Descriptors
Tagged, immutable descriptions of finite-dimensional normed spaces
"""
import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from src.core.errors import InvalidDescriptor
from src.core.pnorm import INF
from src.core.vector import TOL, SparseVector


@dataclass(frozen=True)
class Lp:
    """l_p^n with p in [1, inf]; p = math.inf is the sup norm."""
    p: float
    dim: int

    def __post_init__(self):
        if not (self.p == INF or (math.isfinite(self.p) and self.p >= 1)):
            raise InvalidDescriptor(f"p must lie in [1, inf], got {self.p}")
        if int(self.dim) != self.dim or self.dim < 1:
            raise InvalidDescriptor(f"dim must be a positive integer, got {self.dim}")


@dataclass(frozen=True)
class PolytopeV:
    """Space whose unit ball is the convex hull of a negation-closed generator set."""
    generators: Tuple[SparseVector, ...]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.dim < 1:
            raise InvalidDescriptor(f"dim must be positive, got {self.dim}")
        if not self.generators:
            raise InvalidDescriptor("PolytopeV needs at least one generator")
        for g in self.generators:
            if g.max_index() > self.dim:
                raise InvalidDescriptor(f"Generator {g} exceeds dimension {self.dim}")
        for g in self.generators:
            if not any((-g).allclose(h) for h in self.generators):
                raise InvalidDescriptor(f"Generator set is not symmetric: -{g} missing")
        dense = np.array([g.to_dense(self.dim) for g in self.generators])
        if np.linalg.matrix_rank(dense, tol=TOL) < self.dim:
            raise InvalidDescriptor("Generators do not span the ambient space")


@dataclass(frozen=True)
class Renormed:
    """The renorming whose ball is conv{+-(e1 + 2x) : x in A n B_base}."""
    base: Lp

    def __post_init__(self):
        if not isinstance(self.base, Lp):
            raise InvalidDescriptor("Renormed base must be an Lp descriptor")
        if self.base.dim < 2:
            raise InvalidDescriptor("Renormed spaces need dim >= 2")

    @property
    def dim(self) -> int:
        return self.base.dim


@dataclass(frozen=True)
class AbsoluteSum:
    """X (+)_N Y for an absolute normalized norm N on R^2."""
    norm2d: "SpaceDescriptor"
    left: "SpaceDescriptor"
    right: "SpaceDescriptor"

    def __post_init__(self):
        if self.norm2d.dim != 2:
            raise InvalidDescriptor(f"norm2d must be 2-dimensional, got {self.norm2d.dim}")

    @property
    def dim(self) -> int:
        return self.left.dim + self.right.dim


@dataclass(frozen=True)
class ProjTensor:
    """Projective tensor product; coordinates are the row-major n x m entries."""
    left: "SpaceDescriptor"
    right: "SpaceDescriptor"

    @property
    def dim(self) -> int:
        return self.left.dim * self.right.dim

    @property
    def shape(self) -> Tuple[int, int]:
        return self.left.dim, self.right.dim


SpaceDescriptor = Union[Lp, PolytopeV, Renormed, AbsoluteSum, ProjTensor]


@dataclass(frozen=True)
class SliceSpec:
    """The closed slice S(f, alpha) = {y in ball : f(y) >= 1 - alpha}."""
    functional: SparseVector
    alpha: float

    def __post_init__(self):
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise InvalidDescriptor(f"Slice depth must be positive, got {self.alpha}")

    @property
    def level(self) -> float:
        return 1.0 - self.alpha


def l1(dim: int) -> Lp:
    return Lp(1.0, dim)


def linf(dim: int) -> Lp:
    return Lp(INF, dim)


def real_line() -> Lp:
    return Lp(1.0, 1)


def _fmt_p(p: float) -> str:
    if p == INF:
        return "inf"
    return f"{p:g}"


def describe(space: SpaceDescriptor) -> str:
    """Canonical text rendering used in reports."""
    if isinstance(space, Lp):
        if space.dim == 1:
            return "R"
        return f"l_{_fmt_p(space.p)}^{space.dim}"
    if isinstance(space, PolytopeV):
        return f"polytope^{space.dim}[{len(space.generators)} generators]"
    if isinstance(space, Renormed):
        return f"renorm({describe(space.base)})"
    if isinstance(space, AbsoluteSum):
        return f"({describe(space.left)} (+)_{describe(space.norm2d)} {describe(space.right)})"
    if isinstance(space, ProjTensor):
        return f"({describe(space.left)} (x)_pi {describe(space.right)})"
    raise InvalidDescriptor(f"Unknown descriptor {space!r}")
