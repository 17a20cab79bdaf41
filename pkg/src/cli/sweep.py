"""
Renorming Sweep
Finite-dimensional deficiency curves of the e1-renorming as a pandas table
"""
import logging
from typing import Dict, Sequence

import pandas as pd

from src.core.errors import InvalidDescriptor, NumericalError, SizeLimit
from src.core.pnorm import INF
from src.core.space import Lp, Renormed, SliceSpec
from src.core.vector import TOL, SparseVector
from src.diag.slices import sampled_slice_sup
from src.renorm.formulas import (
    E1, exposure_margin, extreme_samples, primal_witness, recomputed_margin, rnorm, supporting_grid,
)

logger = logging.getLogger(__name__)

CONSTRUCTIONS: Dict[str, float] = {
    "renorm-l2": 2.0,
    "renorm-l1": 1.0,
    "renorm-linf": INF,
}
COLUMNS = ["n", "alpha", "dpoint_deficiency_proxy", "exposure_margin", "witness_distance"]


def deficiency_proxy(space: Renormed, alpha: float, extremes: Sequence[SparseVector]) -> float:
    """2 minus the smallest sampled slice diameter at e1 over the supporting grid."""
    smallest = min(
        sampled_slice_sup(space, E1, SliceSpec(f, alpha), extremes) for f in supporting_grid(space)
    )
    return max(0.0, 2.0 - smallest)


def witness_distance(space: Renormed) -> float:
    """|||e1 - w||| for the primal witness built from z = e1 at the last coordinate."""
    return rnorm(space, E1 - primal_witness(space, E1, space.dim))


def build_sweep(dims: Sequence[int], alphas: Sequence[float], construction: str = "renorm-l2",
                samples: int = 16, seed: int = 2024, max_n: int = 16) -> pd.DataFrame:
    """
    One row per (n, alpha), sorted by n then alpha as given.

    Args:
        dims: Dimensions n >= 2
        alphas: Slice depths
        construction: Key of CONSTRUCTIONS naming the base exponent
        samples: Random extreme points drawn per n
        seed: Sampling seed
        max_n: Largest admissible n

    Raises:
        SizeLimit: if some n exceeds max_n
        InvalidDescriptor: for unknown constructions or n < 2
    """
    if construction not in CONSTRUCTIONS:
        raise InvalidDescriptor(
            f"Unknown construction {construction!r}; expected one of {', '.join(CONSTRUCTIONS)}"
        )
    if dims and max(dims) > max_n:
        raise SizeLimit(f"Sweep dimension {max(dims)} exceeds cap {max_n}")
    p = CONSTRUCTIONS[construction]
    rows = []
    for n in sorted(dims):
        space = Renormed(Lp(p, n))
        extremes = extreme_samples(space, samples, seed)
        margin = exposure_margin(space)
        recomputed = recomputed_margin(space, extremes)
        if abs(recomputed - margin) > TOL:
            raise NumericalError(
                f"Exposure margin {margin:.12g} disagrees with {recomputed:.12g} over sampled extremes at n={n}"
            )
        distance = witness_distance(space)
        for alpha in alphas:
            rows.append({
                "n": n,
                "alpha": alpha,
                "dpoint_deficiency_proxy": deficiency_proxy(space, alpha, extremes),
                "exposure_margin": margin,
                "witness_distance": distance,
            })
        logger.debug(f"Sweep row block n={n} done")
    logger.info(f"Sweep {construction}: {len(rows)} rows")
    return pd.DataFrame(rows, columns=COLUMNS)


def sweep_csv(frame: pd.DataFrame) -> str:
    """CSV text with header, LF line endings and %.12g numbers."""
    return frame.to_csv(index=False, float_format="%.12g", lineterminator="\n")
