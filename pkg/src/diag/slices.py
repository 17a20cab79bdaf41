"""
Slice Diameters
Exact and sampled values of sup{||x - y|| : y in S(f, alpha)}
"""
import logging
from typing import Iterable, Tuple

from src.core.errors import EmptySlice
from src.core.norms import norm
from src.core.space import Renormed, SliceSpec, SpaceDescriptor
from src.core.vector import SparseVector, pairing
from src.diag.denting import renorm_family
from src.polytope.realize import is_polyhedral, to_vball

logger = logging.getLogger(__name__)


def slice_sup(space: SpaceDescriptor, x: SparseVector, slice_spec: SliceSpec) -> float:
    """
    Max of ||x - y|| over the closed slice; exact for polyhedral balls and a
    sampled lower bound for the renorming of a smooth base.

    Raises:
        NotPolyhedral: if the space has neither a vertex model nor a sampled family
        EmptySlice: if the slice is empty
    """
    return slice_sup_bound(space, x, slice_spec)[0]


def slice_sup_bound(space: SpaceDescriptor, x: SparseVector, slice_spec: SliceSpec) -> Tuple[float, bool]:
    """
    Slice diameter at x together with an exactness flag.

    A polyhedral ball uses ||x - y|| = max_g g(x) - g(y) over facet normals g,
    so the value is max_g [g(x) + max over the slice of (-g)]. Renormed
    spaces over a smooth base fall back to sampled_slice_sup over x and the
    sampled extreme family.

    Returns:
        Tuple (value, exact)
    """
    if isinstance(space, Renormed) and not is_polyhedral(space):
        value = sampled_slice_sup(space, x, slice_spec, [x] + renorm_family(space, x))
        logger.debug(f"Sampled slice diameter on {space!r}: {value:.12g}")
        return value, False
    ball = to_vball(space)
    best = float("-inf")
    for g in ball.facet_normals():
        result = ball.slice_max_linear(slice_spec, -g)
        best = max(best, pairing(g, x) + result.value)
    return best, True


def sampled_slice_sup(space: SpaceDescriptor, x: SparseVector, slice_spec: SliceSpec,
                      extremes: Iterable[SparseVector]) -> float:
    """
    Lower bound on the slice diameter at x from a finite family of extreme points.

    Candidates are the family members inside the slice and, for each pair with
    one member inside and one outside, the point where their segment crosses
    the cutting hyperplane. Exact for a polytope given all its extreme points.

    Raises:
        EmptySlice: if no family member lies in the slice
    """
    f = slice_spec.functional
    level = slice_spec.level
    inside, outside = [], []
    for v in extremes:
        (inside if pairing(f, v) >= level else outside).append(v)
    if not inside:
        raise EmptySlice(f"No sampled extreme point lies in S({f}, {slice_spec.alpha})")
    best = max(norm(space, x - v) for v in inside)
    for v in inside:
        fv = pairing(f, v)
        for w in outside:
            fw = pairing(f, w)
            t = (fv - level) / (fv - fw)
            best = max(best, norm(space, x - (v + (w - v) * t)))
    return best
