"""
Sparse Vectors
Finitely supported coordinate maps, 1-based, used for points and functionals
"""
import math
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple

import numpy as np

from src.core.errors import BadIndex

# Global comparison tolerance for every float identity in the library.
TOL = 1e-9


class SparseVector:
    """
    Immutable finitely supported vector.

    Entries map a 1-based coordinate index to a nonzero float. Zero values
    are dropped on construction so that support() is exactly the stored keys.
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Optional[Mapping[int, float]] = None):
        clean: Dict[int, float] = {}
        for index, value in (entries or {}).items():
            i = int(index)
            if i < 1:
                raise BadIndex(f"Coordinate indices are 1-based, got {index}")
            v = float(value)
            if not math.isfinite(v):
                raise ValueError(f"Non-finite entry {value} at coordinate {i}")
            if v != 0.0:
                clean[i] = v
        self._entries = dict(sorted(clean.items()))
        self._hash = None

    # Construction helpers
    @classmethod
    def basis(cls, index: int, value: float = 1.0) -> "SparseVector":
        """Unit vector e_index (scaled by value)."""
        return cls({index: value})

    @classmethod
    def zero(cls) -> "SparseVector":
        return cls()

    @classmethod
    def from_dense(cls, values: Iterable[float], offset: int = 0) -> "SparseVector":
        """Build from a dense sequence; values[0] lands on coordinate offset + 1."""
        return cls({offset + i + 1: float(v) for i, v in enumerate(values)})

    @classmethod
    def from_json(cls, data: Mapping[str, float]) -> "SparseVector":
        return cls({int(k): float(v) for k, v in data.items()})

    # Read access
    def get(self, index: int) -> float:
        return self._entries.get(index, 0.0)

    def __getitem__(self, index: int) -> float:
        return self.get(index)

    def support(self) -> Tuple[int, ...]:
        return tuple(self._entries.keys())

    def items(self) -> Iterator[Tuple[int, float]]:
        return iter(self._entries.items())

    def max_index(self) -> int:
        """Largest supported coordinate, 0 for the zero vector."""
        return max(self._entries) if self._entries else 0

    def is_zero(self) -> bool:
        return not self._entries

    def __len__(self) -> int:
        return len(self._entries)

    # Arithmetic
    def __add__(self, other: "SparseVector") -> "SparseVector":
        merged = dict(self._entries)
        for i, v in other._entries.items():
            merged[i] = merged.get(i, 0.0) + v
        return SparseVector(merged)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + (-other)

    def __neg__(self) -> "SparseVector":
        return SparseVector({i: -v for i, v in self._entries.items()})

    def __mul__(self, scalar: float) -> "SparseVector":
        s = float(scalar)
        return SparseVector({i: s * v for i, v in self._entries.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: float) -> "SparseVector":
        return self * (1.0 / float(scalar))

    # Transformations
    def restrict(self, keep: Callable[[int], bool]) -> "SparseVector":
        """Keep only the coordinates accepted by the predicate."""
        return SparseVector({i: v for i, v in self._entries.items() if keep(i)})

    def shift(self, offset: int) -> "SparseVector":
        """Re-index every coordinate i to i + offset."""
        return SparseVector({i + offset: v for i, v in self._entries.items()})

    def to_dense(self, dim: int) -> np.ndarray:
        out = np.zeros(dim)
        for i, v in self._entries.items():
            if i > dim:
                raise BadIndex(f"Coordinate {i} exceeds dimension {dim}")
            out[i - 1] = v
        return out

    def to_json(self) -> Dict[str, float]:
        return {str(i): v for i, v in self._entries.items()}

    # Comparisons
    def norm_inf(self) -> float:
        return max((abs(v) for v in self._entries.values()), default=0.0)

    def allclose(self, other: "SparseVector", tol: float = TOL) -> bool:
        return (self - other).norm_inf() <= tol

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._entries.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {v:g}" for i, v in self._entries.items())
        return f"SparseVector({{{body}}})"


def pairing(f: SparseVector, x: SparseVector) -> float:
    """Dual pairing <f, x>: exact sum over the common support."""
    small, large = (f, x) if len(f) <= len(x) else (x, f)
    return math.fsum(v * large.get(i) for i, v in small.items())


def split_parts(x: SparseVector) -> Tuple[float, SparseVector, SparseVector]:
    """
    Split x into its e1 coefficient and the positive and negative parts of
    x - x(1) e1.

    Returns:
        Tuple (e1coeff, xplus, xminus) with x = e1coeff*e1 + xplus - xminus
    """
    plus = {i: v for i, v in x.items() if i > 1 and v > 0}
    minus = {i: -v for i, v in x.items() if i > 1 and v < 0}
    return x.get(1), SparseVector(plus), SparseVector(minus)
