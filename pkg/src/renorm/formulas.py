"""
Renorming Formulas
Closed-form primal and dual norms of the e1-renorming, its dual decomposition and vertex models
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from src.core.errors import BadIndex, NegativeFirstCoordinate, NotInBall, NotPolyhedral, SearchExhausted
from src.core.norms import check_dimension
from src.core.pnorm import INF, dual_exponent, p_norm, top_up
from src.core.space import Renormed
from src.core.vector import TOL, SparseVector, pairing, split_parts

logger = logging.getLogger(__name__)

E1 = SparseVector.basis(1)
SUPPORTING_STEPS = (0.0, 0.25, 0.5, 0.75, 1.0)


def base_norm(space: Renormed, x: SparseVector) -> float:
    return p_norm((v for _, v in x.items()), space.base.p)


def base_dual_norm(space: Renormed, f: SparseVector) -> float:
    return p_norm((v for _, v in f.items()), dual_exponent(space.base.p))


def rnorm(space: Renormed, x: SparseVector) -> float:
    """
    Renormed norm: max{|c|, |c - ||x+||, |c + ||x-|||, (||x+|| + ||x-||)/2}
    with c = e1*(x) and x+-, x- the sign parts of x - c e1 in the base norm.
    """
    check_dimension(space, x)
    c, plus, minus = split_parts(x)
    a = base_norm(space, plus)
    b = base_norm(space, minus)
    return max(abs(c), abs(c - a), abs(c + b), 0.5 * (a + b))


def rnorm_dual(space: Renormed, f: SparseVector) -> float:
    """Dual renormed norm: max{|f(e1) + 2||f+||*|, |f(e1) - 2||f-||*|}."""
    check_dimension(space, f)
    c, plus, minus = split_parts(f)
    return max(abs(c + 2.0 * base_dual_norm(space, plus)), abs(c - 2.0 * base_dual_norm(space, minus)))


def sum_model_norm(space: Renormed, x: SparseVector) -> float:
    """Norm of the Y (+)_1 R e1 model: |x(1)| + ||x - x(1) e1||."""
    check_dimension(space, x)
    return abs(x.get(1)) + base_norm(space, x.restrict(lambda i: i > 1))


def _base_norming(space: Renormed, part: SparseVector) -> SparseVector:
    """Nonnegative h with base dual norm 1 and h(part) = ||part|| for a nonzero nonnegative part."""
    p = space.base.p
    if p == 1:
        return SparseVector({i: 1.0 for i, v in part.items() if v > 0})
    if p == INF:
        top = max(part.items(), key=lambda item: item[1])[0]
        return SparseVector.basis(top)
    size = base_norm(space, part)
    return SparseVector({i: (v / size) ** (p - 1.0) for i, v in part.items()})


def _sign(value: float) -> float:
    return -1.0 if value < 0 else 1.0


def norming_functionals(space: Renormed, x: SparseVector) -> List[SparseVector]:
    """
    Dual-ball functionals f with f(x) = rnorm(x), one per attaining term of the norm formula.

    The terms |c|, |c - ||x+|||, |c + ||x-||| and (||x+|| + ||x-||)/2 are normed by
    +-e1*, +-(e1* - h+), +-(e1* - h-) and (h+ - h-)/2, with h+-
    the base norming functionals of the sign parts.
    """
    c, plus, minus = split_parts(x)
    a, b = base_norm(space, plus), base_norm(space, minus)
    h_plus = _base_norming(space, plus) if a > TOL else SparseVector()
    h_minus = _base_norming(space, minus) if b > TOL else SparseVector()
    terms = [
        (abs(c), E1 * _sign(c)),
        (abs(c - a), (E1 - h_plus) * _sign(c - a)),
        (abs(c + b), (E1 - h_minus) * _sign(c + b)),
        (0.5 * (a + b), (h_plus - h_minus) * 0.5),
    ]
    value = max(t for t, _ in terms)
    found: List[SparseVector] = []
    for attained, f in terms:
        if value - attained <= TOL and not any(f.allclose(g) for g in found):
            found.append(f)
    return found


@dataclass(frozen=True)
class DualDecomposition:
    """z* = lam (e1* - y*) + (1 - lam) (x* - y*) / 2 with x*, y* in F n B."""
    lam: float
    xstar: SparseVector
    ystar: SparseVector

    def recompose(self) -> SparseVector:
        return (E1 - self.ystar) * self.lam + (self.xstar - self.ystar) * (0.5 * (1.0 - self.lam))


def decompose_dual(space: Renormed, zstar: SparseVector) -> DualDecomposition:
    """
    Decompose a functional of the dual unit ball with z*(e1) >= 0.

    Raises:
        NotInBall: if the dual renormed norm exceeds 1 + TOL
        NegativeFirstCoordinate: if z*(e1) < 0 (negate first)
    """
    if rnorm_dual(space, zstar) > 1.0 + TOL:
        raise NotInBall(f"Dual norm of {zstar} exceeds 1")
    lam, plus, minus = split_parts(zstar)
    if lam < -TOL:
        raise NegativeFirstCoordinate(f"z*(e1) = {lam} < 0; decompose -z* instead")
    lam = min(max(lam, 0.0), 1.0)
    if 1.0 - lam <= 0.0:
        xstar = SparseVector()
    else:
        xstar = plus * (2.0 / (1.0 - lam))
    ystar = minus * (2.0 / (1.0 + lam))
    return DualDecomposition(lam=lam, xstar=xstar, ystar=ystar)


def primal_witness(space: Renormed, z: SparseVector, k: int) -> SparseVector:
    """
    Witness w = z + 2 lam a e_k with rnorm(e1 - w) = 2.

    lam = (1 + e1*(z)) / 2, x = z+ / (2 lam) and a tops x up to the base unit sphere.

    Raises:
        BadIndex: if k = 1, k > dim or k is in the support of z
        NotInBall: if rnorm(z) > 1 + TOL
    """
    if k < 2 or k > space.dim or k in z.support():
        raise BadIndex(f"Witness index {k} must lie in 2..{space.dim} outside supp(z)")
    if rnorm(space, z) > 1.0 + TOL:
        raise NotInBall(f"rnorm({z}) exceeds 1")
    c, plus, _ = split_parts(z)
    lam = (1.0 + c) / 2.0
    x_norm = base_norm(space, plus) / (2.0 * lam) if lam > 0 else 0.0
    a = top_up(min(x_norm, 1.0), space.base.p)
    return z + SparseVector.basis(k, 2.0 * lam * a)


def dual_witness(space: Renormed, zstar: SparseVector, k: int) -> SparseVector:
    """
    Witness w* = z* + ((1 - lam)/2) a e_2k* - ((1 + lam)/2) b e_2k+1* with
    rnorm_dual(e1* - w*) = rnorm_dual(e1* + w*) = 2.

    Functionals with z*(e1) < 0 are handled through -witness(-z*).

    Raises:
        BadIndex: if 2k+1 > dim, k < 1 or 2k, 2k+1 meet supp(z*)
        NotInBall: if rnorm_dual(z*) > 1 + TOL
    """
    if k < 1 or 2 * k + 1 > space.dim or {2 * k, 2 * k + 1} & set(zstar.support()):
        raise BadIndex(f"Coordinates {2 * k}, {2 * k + 1} must be free and within dim {space.dim}")
    if zstar.get(1) < 0:
        return -dual_witness(space, -zstar, k)
    decomposition = decompose_dual(space, zstar)
    q = dual_exponent(space.base.p)
    a = top_up(base_dual_norm(space, decomposition.xstar), q)
    b = top_up(base_dual_norm(space, decomposition.ystar), q)
    lam = decomposition.lam
    return zstar + SparseVector({2 * k: 0.5 * (1.0 - lam) * a, 2 * k + 1: -0.5 * (1.0 + lam) * b})


def renorm_generators(space: Renormed):
    """
    Vertex model of the renormed ball for base l_1 or l_inf.

    Raises:
        NotPolyhedral: for any other base exponent
    """
    from src.polytope.vball import VBall
    p, n = space.base.p, space.dim
    generators: List[SparseVector] = [E1, -E1]
    if p == 1:
        tails = [SparseVector.basis(j, 2.0) for j in range(2, n + 1)]
    elif p == INF:
        tails = [
            SparseVector({j: 2.0 for j in subset})
            for r in range(1, n)
            for subset in itertools.combinations(range(2, n + 1), r)
        ]
    else:
        raise NotPolyhedral(f"Base l_{p:g} has no finite vertex model")
    for tail in tails:
        generators.append(E1 + tail)
        generators.append(-(E1 + tail))
    logger.debug(f"Renormed vertex model with {len(generators)} generators in dim {n}")
    return VBall(generators, n)


def exposing_functional(space: Renormed) -> SparseVector:
    """
    Norm-one functional e1* - c sum_{j>=2} ej* exposing e1, c = 1 / (2 ||1||_q).
    """
    q = dual_exponent(space.base.p)
    ones = p_norm([1.0] * (space.dim - 1), q)
    c = 1.0 / (2.0 * ones)
    return E1 - SparseVector({j: c for j in range(2, space.dim + 1)})


def exposure_margin(space: Renormed) -> float:
    """
    Certified gap 1 - sup{f(v) : v extreme, v != e1} for the exposing functional.

    The sup is max(1 - 2c, 2c ||1||_q - 1, -1) = max(1 - 2c, 0), giving (n-1)^(-1/q).
    """
    q = dual_exponent(space.base.p)
    ones = p_norm([1.0] * (space.dim - 1), q)
    c = 1.0 / (2.0 * ones)
    return 1.0 - max(1.0 - 2.0 * c, 2.0 * c * ones - 1.0, -1.0)


def recomputed_margin(space: Renormed, family: Iterable[SparseVector]) -> float:
    """
    1 - max f(v) of the exposing functional over a family of extreme points other than e1.

    Exact over the vertex model of an l_1 or l_inf base; over sampled extreme
    points it is an upper bound on the true gap.

    Raises:
        SearchExhausted: if the family holds no point other than e1
    """
    f = exposing_functional(space)
    values = [pairing(f, v) for v in family if not v.allclose(E1)]
    if not values:
        raise SearchExhausted("Exposure family has no extreme point other than e1")
    return 1.0 - max(values)


def supporting_grid(space: Renormed) -> List[SparseVector]:
    """Functionals e1* - t 1/||1||_q, t in SUPPORTING_STEPS; each attains 1 at e1 with dual norm 1."""
    n = space.dim
    ones = p_norm([1.0] * (n - 1), dual_exponent(space.base.p))
    tail = SparseVector({j: 1.0 / ones for j in range(2, n + 1)})
    return [E1 - tail * t for t in SUPPORTING_STEPS]


def extreme_samples(space: Renormed, count: int, seed: int) -> List[SparseVector]:
    """
    Deterministic finite subset of the extreme set {+-e1} u {+-(e1 + 2x) : x in A n S}.
    """
    n = space.dim
    samples: List[SparseVector] = [E1, -E1]
    for j in range(2, n + 1):
        v = E1 + SparseVector.basis(j, 2.0)
        samples.extend([v, -v])
    rng = np.random.default_rng(seed)
    for _ in range(count):
        raw = np.abs(rng.standard_normal(n - 1))
        x = SparseVector.from_dense(raw, offset=1)
        x = x / base_norm(space, x)
        v = E1 + x * 2.0
        samples.extend([v, -v])
    return samples
