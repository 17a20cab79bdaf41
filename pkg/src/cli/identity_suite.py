"""
Identity Suite
Named identity checks with embedded expected values, run by `dlab verify`
"""
import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Callable, List, Optional, Sequence

import numpy as np

from src.cli.sweep import witness_distance
from src.core.errors import DlabError, SpaceParseError
from src.core.norms import norm
from src.core.space import AbsoluteSum, Lp, PolytopeV, Renormed, SliceSpec, l1, linf, real_line
from src.core.vector import SparseVector, pairing
from src.diag.checks import daugavet_check, dpoint_deficiency, find_non_nabla, nabla_check, strongly_exposed_check
from src.diag.slices import slice_sup
from src.polytope.realize import l1_ball, linf_ball, to_vball
from src.polytope.vball import VBall
from src.renorm.corner import corner_point, corner_renorm
from src.renorm.formulas import (
    E1, base_dual_norm, decompose_dual, dual_witness, primal_witness, rnorm, rnorm_dual,
)
from src.sums.absolute import SumPoint, sum_norm
from src.sums.transfer import check_l1_transfer, check_linf_characterization
from src.tensor.projective import elementary, proj_norm
from src.tensor.witnesses import tensor_denting_distance

logger = logging.getLogger(__name__)

MODULES = ("core", "polytope", "renorm", "sums", "tensor", "diag")
DEFAULT_TOLERANCE = 1e-9


def e(i: int, value: float = 1.0) -> SparseVector:
    return SparseVector.basis(i, value)


def vec(*values: float) -> SparseVector:
    return SparseVector.from_dense(values)


@dataclass(frozen=True)
class IdentityCase:
    """A named identity with its expected value and a zero-argument computation."""
    id: str
    module: str
    description: str
    provenance: str  # identity | derived | trivial
    expected: Any
    compute: Callable[[], Any]
    tolerance: float = DEFAULT_TOLERANCE
    anchor: str = ""  # the claim the row checks


@dataclass
class IdentityRow:
    """Outcome of one identity case."""
    id: str
    module: str
    description: str
    anchor: str
    provenance: str
    expected: Any
    computed: Any
    passed: bool
    error: Optional[str] = None

    def to_dict(self):
        return asdict(self)


def _matches(expected: Any, computed: Any, tolerance: float) -> bool:
    if isinstance(expected, (list, tuple)):
        return (
            isinstance(computed, (list, tuple))
            and len(expected) == len(computed)
            and all(_matches(a, b, tolerance) for a, b in zip(expected, computed))
        )
    if isinstance(expected, bool) or isinstance(expected, str):
        return expected == computed
    if isinstance(expected, (int, float)):
        return isinstance(computed, (int, float)) and math.isclose(
            float(expected), float(computed), rel_tol=0.0, abs_tol=tolerance
        )
    return expected == computed


def _plain(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, SparseVector):
        return value.to_json()
    if isinstance(value, np.generic):
        return value.item()
    return value


def _renorm_model(n: int) -> PolytopeV:
    return PolytopeV((E1, -E1, E1 + e(2, 2.0), -(E1 + e(2, 2.0))), n)


def _core_cases() -> List[IdentityCase]:
    l2_4 = Renormed(Lp(2.0, 4))
    return [
        IdentityCase("core.norm.l1", "core", "||e1 + e2||_1 = 2", "trivial", 2.0,
                     lambda: norm(l1(3), e(1) + e(2)),
                     anchor="l_p norm"),
        IdentityCase("core.norm.renorm-top", "core", "renorm l_2^4: |||e1 + 2e2||| = 1", "identity", 1.0,
                     lambda: norm(l2_4, e(1) + e(2, 2.0)),
                     anchor="renormed norm formula"),
        IdentityCase("core.norm.renorm-tail", "core", "renorm l_2^4: |||-2e3||| = 2", "derived", 2.0,
                     lambda: norm(l2_4, e(3, -2.0)),
                     anchor="renormed norm formula"),
        IdentityCase("core.pairing", "core", "<e1* - e2*, e1 + 2e2> = -1", "trivial", -1.0,
                     lambda: pairing(e(1) - e(2), e(1) + e(2, 2.0)),
                     anchor="dual pairing"),
    ]


def _polytope_cases() -> List[IdentityCase]:
    model = _renorm_model(2)
    return [
        IdentityCase("polytope.gauge.renorm-e2", "polytope",
                     "conv{+-e1, +-(e1+2e2)}: gauge(e2) = 1", "identity", 1.0,
                     lambda: to_vball(model).gauge(e(2)),
                     anchor="vertex model of the renorming"),
        IdentityCase("polytope.support.renorm-e2", "polytope",
                     "conv{+-e1, +-(e1+2e2)}: support(e2*) = 2", "identity", 2.0,
                     lambda: to_vball(model).support(e(2)),
                     anchor="vertex model of the renorming"),
        IdentityCase("polytope.extreme.midpoint", "polytope",
                     "{+-e1, +-e2, +-(e1+e2)/2}: 4 extreme points", "trivial", 4,
                     lambda: len(VBall([e(1), -e(1), e(2), -e(2), vec(0.5, 0.5), vec(-0.5, -0.5)], 2).extreme_points()),
                     anchor="extreme point reduction"),
        IdentityCase("polytope.facets.renorm", "polytope",
                     "conv{+-e1, +-(e1+2e2)}: 4 facet normals", "derived", 4,
                     lambda: len(to_vball(model).facet_normals()),
                     anchor="vertex model of the renorming"),
        IdentityCase("polytope.slice.l1", "polytope",
                     "l_1^3: max of -e1* over S(e1*, 0.1) = -0.9", "derived", -0.9,
                     lambda: l1_ball(3).slice_max_linear(SliceSpec(e(1), 0.1), -e(1)).value,
                     anchor="slice maximization"),
        IdentityCase("polytope.slice.linf", "polytope",
                     "l_inf^2: max of e2* over S((-1,0), 0.25) = 1", "derived", 1.0,
                     lambda: linf_ball(2).slice_max_linear(SliceSpec(vec(-1, 0), 0.25), e(2)).value,
                     anchor="slice maximization"),
    ]


def _renorm_cases() -> List[IdentityCase]:
    l2_3 = Renormed(Lp(2.0, 3))
    l2_4 = Renormed(Lp(2.0, 4))
    l2_7 = Renormed(Lp(2.0, 7))

    def decomposition():
        d = decompose_dual(l2_3, e(1) - e(2, 0.7))
        return (d.lam, base_dual_norm(l2_3, d.xstar), d.ystar.get(2))

    def dual_zero():
        w = dual_witness(l2_7, SparseVector(), 3)
        return (rnorm_dual(l2_7, E1 - w), rnorm_dual(l2_7, E1 + w))

    return [
        IdentityCase("renorm.rnorm.segment", "renorm",
                     "|||0.3e2 - 0.7(e1 + 2e3)||| = 1 on the segment", "identity", 1.0,
                     lambda: rnorm(l2_3, e(2, 0.3) - (E1 + e(3, 2.0)) * 0.7),
                     anchor="segment to -(e1 + 2y) on the sphere"),
        IdentityCase("renorm.rnorm.e1-plus-top", "renorm", "|||e1 + (e1 + 2e2)||| = 2", "identity", 2.0,
                     lambda: rnorm(l2_3, E1 + (E1 + e(2, 2.0))),
                     anchor="top face at distance 2 from e1"),
        IdentityCase("renorm.rnorm.e1-minus-top", "renorm", "|||e1 - (e1 + 2e2)||| = 2", "identity", 2.0,
                     lambda: rnorm(l2_3, E1 - (E1 + e(2, 2.0))),
                     anchor="top face at distance 2 from e1"),
        IdentityCase("renorm.dual.e2", "renorm", "|||e2*||| = 2", "identity", 2.0,
                     lambda: rnorm_dual(l2_3, e(2)),
                     anchor="dual renormed norm formula"),
        IdentityCase("renorm.dual.e1-minus-e2", "renorm", "|||e1* - e2*||| = 1", "identity", 1.0,
                     lambda: rnorm_dual(l2_3, E1 - e(2)),
                     anchor="dual renormed norm formula"),
        IdentityCase("renorm.dual.e1-plus-face", "renorm", "|||e1* + (e1* - e2*)||| = 2", "identity", 2.0,
                     lambda: rnorm_dual(l2_3, E1 + (E1 - e(2))),
                     anchor="dual renormed norm formula"),
        IdentityCase("renorm.dual.e1-half-difference", "renorm", "|||e1* - (e2* - e3*)/2||| = 2", "identity", 2.0,
                     lambda: rnorm_dual(l2_3, E1 - (e(2) - e(3)) * 0.5),
                     anchor="dual renormed norm formula"),
        IdentityCase("renorm.decompose.top", "renorm",
                     "decompose e1* - 0.7e2*: lam = 1, x* = 0, y* = 0.7e2*", "identity", [1.0, 0.0, 0.7],
                     decomposition,
                     anchor="dual ball decomposition"),
        IdentityCase("renorm.primal_witness.e1", "renorm",
                     "z = e1, k = 3: |||e1 - (e1 + 2e3)||| = 2", "identity", 2.0,
                     lambda: rnorm(l2_4, E1 - primal_witness(l2_4, E1, 3)),
                     anchor="primal witness at distance 2"),
        IdentityCase("renorm.primal_witness.zero", "renorm",
                     "z = 0, k = 4: |||e1 - e4||| = 2", "derived", 2.0,
                     lambda: rnorm(l2_4, E1 - primal_witness(l2_4, SparseVector(), 4)),
                     anchor="primal witness at distance 2"),
        IdentityCase("renorm.dual_witness.zero", "renorm",
                     "z* = 0, k = 3: |||e1* -+ w*||| = 2", "derived", [2.0, 2.0], dual_zero,
                     anchor="dual witness at distance 2"),
        IdentityCase("renorm.corner.l2", "renorm",
                     "corner renorming of l_2^2: new last unit vector is nabla", "identity", "Holds",
                     lambda: _corner_verdict(Lp(2.0, 2)),
                     anchor="corner renorming has a nabla point"),
        IdentityCase("renorm.corner.l2-3", "renorm",
                     "corner renorming of l_2^3: new last unit vector is nabla", "derived", "Holds",
                     lambda: _corner_verdict(Lp(2.0, 3)),
                     anchor="corner renorming has a nabla point"),
        IdentityCase("renorm.exposed.l1-3", "renorm",
                     "renorm l_1^3: e1 strongly exposed with margin 1", "derived", 1.0,
                     lambda: strongly_exposed_check(Renormed(l1(3)), E1).witness.value,
                     anchor="e1 strongly exposed"),
        IdentityCase("renorm.sweep.witness-n4", "renorm",
                     "sweep n = 4: |||e1 - w||| = 2, w at the last coordinate", "identity", 2.0,
                     lambda: witness_distance(l2_4),
                     anchor="primal witness at distance 2"),
    ]


def _corner_verdict(space) -> str:
    total = corner_renorm(space)
    return nabla_check(total, corner_point(total)).verdict.value


def _sums_cases() -> List[IdentityCase]:
    return [
        IdentityCase("sums.norm.l1-of-linf", "sums", "l_1 sum of l_inf^2: ||((1,1),(1,-1))|| = 2", "trivial", 2.0,
                     lambda: sum_norm(AbsoluteSum(l1(2), linf(2), linf(2)), SumPoint(vec(1, 1), vec(1, -1))),
                     anchor="absolute sum norm"),
        IdentityCase("sums.norm.l2", "sums", "N = l_2: ||(x, y)|| = sqrt 2 for unit x, y", "trivial", math.sqrt(2.0),
                     lambda: sum_norm(AbsoluteSum(Lp(2.0, 2), real_line(), real_line()), SumPoint(e(1), e(1))),
                     anchor="absolute sum norm"),
        IdentityCase("sums.l1_transfer.reals", "sums", "R (+)_1 R: (1, 0) nabla on both sides", "identity", [True, True],
                     lambda: check_l1_transfer(real_line(), e(1), real_line()),
                     anchor="nabla transfers to l_1-sums"),
        IdentityCase("sums.l1_transfer.linf-vertex", "sums", "l_inf^2 (+)_1 R at (1,1): nabla on both sides",
                     "identity", [True, True],
                     lambda: check_l1_transfer(linf(2), vec(1, 1), real_line()),
                     anchor="nabla transfers to l_1-sums"),
        IdentityCase("sums.linf.vertex", "sums", "R (+)_inf R at (1,1): nabla", "identity", [True, True],
                     lambda: check_linf_characterization(real_line(), e(1), real_line(), e(1)),
                     anchor="nabla in l_inf-sums"),
        IdentityCase("sums.linf.edge", "sums", "R (+)_inf R at (1,0): not nabla", "identity", [False, False],
                     lambda: check_linf_characterization(real_line(), e(1), real_line(), SparseVector()),
                     anchor="nabla in l_inf-sums"),
    ]


def _tensor_cases() -> List[IdentityCase]:
    X = l1_ball(2)

    def diagonal():
        return proj_norm(X, X, elementary(e(1), e(1), (2, 2)) - elementary(e(2), e(2), (2, 2)))

    return [
        IdentityCase("tensor.proj.diagonal", "tensor", "l_1^2 (x) l_1^2: ||e1(x)e1 - e2(x)e2|| = 2", "derived", 2.0,
                     diagonal, 1e-7,
                     anchor="projective norm"),
        IdentityCase("tensor.denting.first-factor", "tensor", "x = y = e1, u = e2, v = e1: distance 2", "identity", 2.0,
                     lambda: tensor_denting_distance(X, X, e(1), e(1), e(2), e(1)), 1e-7,
                     anchor="nabla tensor of nabla vertices"),
        IdentityCase("tensor.denting.sign-flip", "tensor", "x = y = e1, u = -e1, v = e1: distance 2", "identity", 2.0,
                     lambda: tensor_denting_distance(X, X, e(1), e(1), -e(1), e(1)), 1e-7,
                     anchor="nabla tensor of nabla vertices"),
    ]


def _diag_cases() -> List[IdentityCase]:
    return [
        IdentityCase("diag.nabla.l1-vertex", "diag", "l_1^3: e1 is nabla", "identity", "Holds",
                     lambda: nabla_check(l1(3), e(1)).verdict.value,
                     anchor="nabla through denting points"),
        IdentityCase("diag.nabla.l1-midpoint", "diag", "l_1^2: (1/2, 1/2) is not nabla, deficiency 1", "identity",
                     ["Fails", 1.0],
                     lambda: (lambda r: (r.verdict.value, r.deficiency))(nabla_check(l1(2), vec(0.5, 0.5))),
                     anchor="nabla through denting points"),
        IdentityCase("diag.nabla.linf-edge", "diag", "l_inf^2: e1 is not nabla, deficiency 1", "identity",
                     ["Fails", 1.0],
                     lambda: (lambda r: (r.verdict.value, r.deficiency))(nabla_check(linf(2), e(1))),
                     anchor="nabla through denting points"),
        IdentityCase("diag.slice_sup.l1", "diag", "l_1^3: slice diameter at e1 of S(e1*, 0.1) = 0.2", "derived", 0.2,
                     lambda: slice_sup(l1(3), e(1), SliceSpec(e(1), 0.1)),
                     anchor="slice diameter"),
        IdentityCase("diag.dpoint.l1", "diag", "l_1^3, e1, alpha 0.1: refuted with value 0.2", "derived",
                     ["Fails", 0.2],
                     lambda: (lambda r: (r.verdict.value, r.witness.value))(dpoint_deficiency(l1(3), e(1), 0.1)),
                     anchor="no DPoints in polytopes"),
        IdentityCase("diag.daugavet.midpoint", "diag", "l_1^2, (1/2, 1/2): fails on the nabla side", "identity",
                     ["Fails", "nabla"],
                     lambda: (lambda r: (r.verdict.value, r.params["failed_side"]))(
                         daugavet_check(l1(2), vec(0.5, 0.5), 0.1)),
                     anchor="Daugavet needs nabla"),
        IdentityCase("diag.daugavet.linf", "diag", "l_inf^2, (1, 0): fails on the nabla side", "identity",
                     ["Fails", "nabla"],
                     lambda: (lambda r: (r.verdict.value, r.params["failed_side"]))(
                         daugavet_check(linf(2), e(1), 0.1)),
                     anchor="Daugavet needs nabla"),
        IdentityCase("diag.find_non_nabla.l1", "diag", "l_1^2: first non-nabla point is (1/2, 1/2)", "identity",
                     [0.5, 0.5], lambda: tuple(find_non_nabla(l1(2)).to_dense(2).tolist()),
                     anchor="non-nabla sphere points"),
        IdentityCase("diag.find_non_nabla.linf", "diag", "l_inf^2: first non-nabla point is (1, 0)", "identity",
                     [1.0, 0.0], lambda: tuple(find_non_nabla(linf(2)).to_dense(2).tolist()),
                     anchor="non-nabla sphere points"),
    ]


def all_cases() -> List[IdentityCase]:
    return _core_cases() + _polytope_cases() + _renorm_cases() + _sums_cases() + _tensor_cases() + _diag_cases()


def run_case(case: IdentityCase) -> IdentityRow:
    try:
        computed = _plain(case.compute())
        passed = _matches(case.expected, computed, case.tolerance)
        error = None
    except DlabError as e:
        logger.error(f"Identity {case.id} raised {type(e).__name__}: {e}")
        computed, passed, error = None, False, f"{type(e).__name__}: {e}"
    return IdentityRow(case.id, case.module, case.description, case.anchor, case.provenance,
                       _plain(case.expected), computed, passed, error)


def run_suite(only: Optional[str] = None) -> List[IdentityRow]:
    """
    Run every identity case, or those of one module.

    Raises:
        SpaceParseError: if `only` names no module
    """
    if only is not None and only not in MODULES:
        raise SpaceParseError(f"Unknown module {only!r}; expected one of {', '.join(MODULES)}")
    cases = [c for c in all_cases() if only is None or c.module == only]
    rows = [run_case(c) for c in cases]
    failed = sum(1 for r in rows if not r.passed)
    logger.info(f"Identity suite: {len(rows) - failed}/{len(rows)} passed")
    return rows


def format_table(rows: Sequence[IdentityRow]) -> str:
    """Fixed-width text table, one line per row plus a summary line."""
    lines = [f"{'id':<34} {'anchor':<36} {'prov':<9} {'expected':<18} {'computed':<18} result"]
    for r in rows:
        lines.append(
            f"{r.id:<34} {r.anchor:<36} {r.provenance:<9} {_cell(r.expected):<18} {_cell(r.computed):<18} "
            f"{'pass' if r.passed else 'FAIL'}"
        )
    failed = sum(1 for r in rows if not r.passed)
    lines.append(f"{len(rows) - failed}/{len(rows)} passed")
    return "\n".join(lines)


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_cell(v) for v in value) + ")"
    if value is None:
        return "-"
    return str(value)
