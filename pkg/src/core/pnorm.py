"""
l_p Norm Helpers
Closed-form p-norms with p = inf as an explicit tag
"""
import math
from typing import Iterable

import numpy as np

INF = math.inf


def dual_exponent(p: float) -> float:
    """Hoelder conjugate q with 1/p + 1/q = 1."""
    if p == 1:
        return INF
    if p == INF:
        return 1.0
    return p / (p - 1.0)


def p_norm(values: Iterable[float], p: float) -> float:
    """p-norm of a finite list of coordinates."""
    arr = np.abs(np.asarray(list(values), dtype=float))
    if arr.size == 0:
        return 0.0
    if p == INF:
        return float(arr.max())
    if p == 1:
        return float(math.fsum(arr))
    if p == 2:
        return float(math.hypot(*arr))
    scale = float(arr.max())
    if scale == 0.0:
        return 0.0
    return scale * float(np.sum((arr / scale) ** p)) ** (1.0 / p)


def top_up(current: float, p: float) -> float:
    """
    Coefficient a >= 0 with ||x + a e_k||_p = 1 for x of norm `current` and
    k outside the support of x.
    """
    if p == INF:
        return 1.0
    residual = max(0.0, 1.0 - min(current, 1.0) ** p)
    return residual ** (1.0 / p)


def is_polyhedral_exponent(p: float) -> bool:
    return p == 1 or p == INF
