"""
Unit tests for slice diameters, denting search and the diametral checks
"""
import itertools

import numpy as np
import pytest

from src.core.errors import EmptySlice, NotOnSphere, SearchExhausted
from src.core.norms import norm
from src.core.space import AbsoluteSum, Lp, PolytopeV, Renormed, SliceSpec, describe, l1, linf, real_line
from src.core.vector import SparseVector, pairing
from src.diag.checks import (
    batch_reports, daugavet_check, delta_deficiency, dpoint_deficiency, find_non_nabla, is_nabla,
    nabla_check, strongly_exposed_check, supporting_functionals,
)
from src.diag.denting import nearest_denting
from src.diag.report import Certificate, DiagnosticReport, Property, Verdict, Witness, revalidate
from src.diag.slices import sampled_slice_sup, slice_sup, slice_sup_bound
from src.polytope.realize import signed_basis, to_vball
from src.renorm.formulas import E1


def e(i, value=1.0):
    return SparseVector.basis(i, value)


def vec(*values):
    return SparseVector.from_dense(values)


MIDPOINT = vec(0.5, 0.5)


def test_slice_sup_l1():
    """Test the exact slice diameter at e1 of S(e1*, 0.1) in l_1^3."""
    assert slice_sup(l1(3), e(1), SliceSpec(e(1), 0.1)) == pytest.approx(0.2)


def test_sampled_slice_sup_is_exact_with_all_extremes():
    """Test the sampled bound equals the exact value given every extreme point."""
    spec = SliceSpec(e(1), 0.1)
    extremes = to_vball(l1(3)).extreme_points()
    assert sampled_slice_sup(l1(3), e(1), spec, extremes) == pytest.approx(slice_sup(l1(3), e(1), spec))


def test_sampled_slice_sup_empty():
    """Test a family with no member in the slice."""
    with pytest.raises(EmptySlice):
        sampled_slice_sup(l1(2), e(1), SliceSpec(e(1), 0.1), [e(2), -e(2)])


def test_nearest_denting_polytope():
    """Test the exact sweep over the square's vertices."""
    search = nearest_denting(linf(2), e(1))
    assert search.exact
    assert search.distance == pytest.approx(1.0)
    assert search.sweep_size == 4


def test_nearest_denting_strictly_convex():
    """Test radial projection inside l_2 and a nearby sphere point on it."""
    inside = nearest_denting(Lp(2.0, 2), e(1, 0.5))
    assert inside.exact and inside.distance == pytest.approx(0.5)
    on_sphere = nearest_denting(Lp(2.0, 2), e(1))
    assert not on_sphere.exact
    assert on_sphere.distance < 0.01


def test_nearest_denting_l1_sum_corner():
    """Test the corner point of l_2^2 (+)_1 R is at distance 2 from every other extreme point."""
    space = AbsoluteSum(l1(2), Lp(2.0, 2), real_line())
    search = nearest_denting(space, e(3))
    assert search.exact
    assert search.distance == pytest.approx(2.0)


def test_nabla_holds_at_l1_vertex():
    """Test e1 is a nabla-point of l_1^3 with distance-2 certificate."""
    report = nabla_check(l1(3), e(1))
    assert report.verdict == Verdict.HOLDS
    assert report.deficiency == 0.0
    assert report.witness.value == pytest.approx(2.0)
    assert revalidate(report, l1(3), e(1))


@pytest.mark.parametrize("space, x", [
    (l1(2), MIDPOINT),
    (linf(2), e(1)),
])
def test_nabla_fails_with_deficiency_one(space, x):
    """Test non-vertex sphere points fail with deficiency 1."""
    report = nabla_check(space, x)
    assert report.fails
    assert report.deficiency == pytest.approx(1.0)
    assert revalidate(report, space, x)


def test_nabla_fails_in_strictly_convex_space():
    """Test every sphere point of l_2 is refuted."""
    report = nabla_check(Lp(2.0, 3), e(1))
    assert report.fails
    assert report.deficiency > 1.9


def test_nabla_renorm_e1_is_lower_bound_only():
    """Test the sampled renorming search reaches distance 2 but cannot certify Holds."""
    report = nabla_check(Renormed(Lp(2.0, 4)), E1)
    assert report.verdict == Verdict.LOWER_BOUND_ONLY
    assert report.deficiency == 0.0
    assert not report.params["exact"]


def test_nabla_renorm_polyhedral_holds():
    """Test e1 is nabla in the l_1 renorming."""
    assert nabla_check(Renormed(l1(3)), E1).holds


def test_nabla_requires_unit_vector():
    """Test off-sphere points are rejected, and the predicate reads them as False."""
    with pytest.raises(NotOnSphere):
        nabla_check(l1(2), e(1, 2.0))
    assert not is_nabla(l1(2), e(1, 2.0))


def test_supporting_functionals():
    """Test the face of the l_1 dual ball at e1."""
    face = supporting_functionals(l1(2), e(1))
    assert sorted(f.get(2) for f in face) == [-1.0, 1.0]
    assert all(f.get(1) == 1.0 for f in face)


def test_dpoint_refuted_in_l1():
    """Test the slice at e1 refutes the DPoint property."""
    report = dpoint_deficiency(l1(3), e(1), 0.1)
    assert report.fails
    assert report.witness.value == pytest.approx(0.2)
    assert report.deficiency == pytest.approx(1.8)
    assert report.params["face_vertices"] == 4
    assert revalidate(report, l1(3), e(1))


def test_strongly_exposed_vertex():
    """Test a square vertex is exposed with margin 1 by the barycentric functional."""
    report = strongly_exposed_check(linf(2), vec(1, 1))
    assert report.holds
    assert report.witness.value == pytest.approx(1.0)
    assert revalidate(report, linf(2), vec(1, 1))


def test_edge_point_is_not_strongly_exposed():
    """Test a square edge midpoint has margin 0."""
    report = strongly_exposed_check(linf(2), e(1))
    assert report.fails
    assert report.witness.value == pytest.approx(0.0)


def test_renorm_e1_strongly_exposed():
    """Test e1 of the l_1 renorming has margin 1."""
    report = strongly_exposed_check(Renormed(l1(3)), E1)
    assert report.holds
    assert report.witness.value == pytest.approx(1.0)


def test_delta_deficiency():
    """Test the facet-slice surrogate on l_inf^2 and l_1^3."""
    square = delta_deficiency(linf(2), e(1), 0.1)
    assert square.fails
    assert square.witness.value == pytest.approx(1.0)
    assert square.property == Property.DELTA_DEFICIENCY
    octahedron = delta_deficiency(l1(3), e(1), 0.1)
    assert octahedron.verdict == Verdict.LOWER_BOUND_ONLY
    assert octahedron.deficiency == 0.0


def test_daugavet_fails_on_nabla_side():
    """Test the midpoint fails before the slice side is consulted."""
    report = daugavet_check(l1(2), MIDPOINT, 0.1)
    assert report.fails
    assert report.params["failed_side"] == "nabla"
    assert len(report.sub_reports) == 2


def test_daugavet_fails_on_dpoint_side():
    """Test a nabla-point that is strongly exposed fails through its slices."""
    report = daugavet_check(Renormed(l1(3)), E1, 0.1)
    assert report.fails
    assert report.params["failed_side"] == "dpoint"
    assert report.sub_reports[0].holds


def test_daugavet_never_holds_in_finite_dimension():
    """Test the best possible verdict is LowerBoundOnly."""
    report = daugavet_check(real_line(), e(1), 0.5)
    assert report.verdict in (Verdict.FAILS, Verdict.LOWER_BOUND_ONLY)


@pytest.mark.parametrize("space, expected", [
    (l1(2), [0.5, 0.5]),
    (linf(2), [1.0, 0.0]),
])
def test_find_non_nabla(space, expected):
    """Test the first midpoint that fails."""
    assert find_non_nabla(space).to_dense(2).tolist() == expected


def test_find_non_nabla_exhausted():
    """Test every point of the real line is nabla."""
    with pytest.raises(SearchExhausted):
        find_non_nabla(real_line(), samples=5)


def test_batch_reports_order():
    """Test reports are ordered by point then alpha."""
    reports = batch_reports(l1(2), [e(1), MIDPOINT], alphas=(0.5, 0.1))
    assert len(reports) == 4
    assert [r.params["alpha"] for r in reports] == [0.5, 0.1, 0.5, 0.1]
    assert reports[2].params["failed_side"] == "nabla"


def test_report_dict_shape():
    """Test the JSON field names of a report."""
    payload = daugavet_check(l1(2), MIDPOINT, 0.1).to_dict()
    assert payload["property"] == "Daugavet"
    assert payload["verdict"] == "Fails"
    assert set(payload["witness"]) >= {"kind", "vector", "value"}
    assert [s["property"] for s in payload["sub_reports"]] == ["Nabla", "DPoint"]


def test_revalidate_detects_tampering():
    """Test a certificate with a wrong recorded value is rejected."""
    certificate = Certificate(point=e(1))
    certificate.add("distance", e(2), 1.5)
    report = DiagnosticReport(Property.NABLA, Verdict.FAILS, 0.5,
                              Witness("vector", e(2), 1.5), {}, certificate)
    assert not revalidate(report, l1(2), e(1))


HEXAGON = PolytopeV((e(1), -e(1), e(2), -e(2), e(1) + e(2), -(e(1) + e(2))), 2)
POLYTOPES = [l1(3), linf(2), HEXAGON, Renormed(l1(3))]


def test_slice_sup_renorm_smooth_base_is_sampled():
    """Test the l_2 renorming returns a sampled lower bound instead of raising."""
    space = Renormed(Lp(2.0, 4))
    value, exact = slice_sup_bound(space, E1, SliceSpec(E1, 0.1))
    assert not exact
    assert value == pytest.approx(2.0)
    assert slice_sup(space, E1, SliceSpec(E1, 0.1)) == value


def test_slice_sup_bound_is_exact_on_polytopes():
    """Test the LP path reports exactness."""
    value, exact = slice_sup_bound(l1(3), e(1), SliceSpec(e(1), 0.1))
    assert exact
    assert value == pytest.approx(0.2)


@pytest.mark.parametrize("x", [E1, E1 + e(2, 2.0), -(E1 + e(3, 2.0))])
def test_dpoint_renorm_smooth_base_is_lower_bound_only(x):
    """Test sampled slice diameters never certify a refutation on the l_2 renorming."""
    space = Renormed(Lp(2.0, 4))
    report = dpoint_deficiency(space, x, 0.1)
    assert report.verdict == Verdict.LOWER_BOUND_ONLY
    assert not report.params["exact"]
    assert 0.0 <= report.deficiency <= 2.0
    assert abs(pairing(report.witness.vector, x) - 1.0) <= 1e-9


def test_renorm_smooth_base_supporting_functionals_at_e1():
    """Test e1* and the supporting grid make up the tested face at e1."""
    face = supporting_functionals(Renormed(Lp(2.0, 4)), E1)
    assert len(face) == 5
    assert all(f.get(1) == 1.0 for f in face)


def test_daugavet_renorm_smooth_base_is_lower_bound_only():
    """Test neither side of the l_2 renorming at e1 is refuted."""
    report = daugavet_check(Renormed(Lp(2.0, 4)), E1, 0.1)
    assert report.verdict == Verdict.LOWER_BOUND_ONLY
    assert report.params["failed_side"] is None
    assert [s.verdict for s in report.sub_reports] == [Verdict.LOWER_BOUND_ONLY] * 2


def test_daugavet_linf_edge_fails_on_nabla_side():
    """Test the square's edge midpoint fails through its nearest vertex."""
    report = daugavet_check(linf(2), e(1), 0.1)
    assert report.fails
    assert report.params["failed_side"] == "nabla"
    assert report.params["nabla_deficiency"] == pytest.approx(1.0)


def _unit(space, vector):
    return vector / norm(space, vector)


@pytest.mark.parametrize("space", POLYTOPES, ids=describe)
def test_slice_sup_monotone_and_bounded(space):
    """Test slice_sup grows with alpha, stays below 2 and reaches 2 once -x is in the slice."""
    rng = np.random.default_rng(7)
    ball = to_vball(space)
    alphas = [0.05, 0.2, 0.5, 1.0, 1.5, 2.0]
    for _ in range(12):
        x = _unit(space, SparseVector.from_dense(rng.standard_normal(space.dim)))
        f = SparseVector.from_dense(rng.standard_normal(space.dim))
        f = f / ball.support(f)
        values = [slice_sup(space, x, SliceSpec(f, alpha)) for alpha in alphas]
        assert all(a <= b + 1e-9 for a, b in zip(values, values[1:]))
        assert max(values) <= 2.0 + 1e-9
        for alpha, value in zip(alphas, values):
            if pairing(f, -x) >= 1.0 - alpha:
                assert value >= 2.0 - 1e-9


def _slice_vertex_candidates(ball, spec):
    """Ball vertices inside the slice plus the points where segments between them cross its hyperplane."""
    inside, outside = [], []
    for v in ball.extreme_points():
        (inside if pairing(spec.functional, v) >= spec.level - 1e-12 else outside).append(v)
    crossings = []
    for v, w in itertools.product(inside, outside):
        fv, fw = pairing(spec.functional, v), pairing(spec.functional, w)
        crossings.append(v + (w - v) * ((fv - spec.level) / (fv - fw)))
    return inside + crossings


@pytest.mark.parametrize("n", [2, 3, 4])
def test_l1_far_vertex_admits_deep_sub_slice(n):
    """Test slices reaching 2 - eps at a vertex v hold a sub-slice around v at distance >= 2 - 2 eps from x."""
    space, ball = l1(n), to_vball(l1(n))
    rng = np.random.default_rng(n)
    functionals = list(ball.facet_normals())
    for _ in range(6):
        f = SparseVector.from_dense(rng.standard_normal(n))
        functionals.append(f / ball.support(f))
    checked = 0
    for x in signed_basis(n):
        for f in functionals:
            for alpha, eps in itertools.product((0.1, 0.5), (0.05, 0.2, 0.4)):
                spec = SliceSpec(f, alpha)
                far = [v for v in ball.extreme_points()
                       if pairing(f, v) >= spec.level and norm(space, x - v) >= 2.0 - eps]
                if not far:
                    continue
                v = far[0]
                h = min((g for g in ball.facet_normals() if abs(pairing(g, v) - 1.0) <= 1e-12),
                        key=lambda g: pairing(g, x))
                sub = SliceSpec(h, eps / 2.0)
                assert pairing(h, v) >= sub.level
                assert sub.level - pairing(h, x) >= 2.0 - 2.0 * eps
                for y in _slice_vertex_candidates(ball, sub):
                    assert norm(space, x - y) >= 2.0 - 2.0 * eps - 1e-9
                checked += 1
    assert checked > 0


@pytest.mark.parametrize("space", POLYTOPES, ids=describe)
def test_nabla_shadow_along_convergent_sequences(space):
    """Test deficiency(x) <= deficiency(x_k) + 2||x - x_k|| whenever x_k is nabla, with x_k -> x on the sphere."""
    rng = np.random.default_rng(3)
    steps = [0.5, 0.1, 0.01, 1e-4, 0.0]
    for x in to_vball(space).extreme_points():
        limit = nabla_check(space, x)
        for _ in range(3):
            d = SparseVector.from_dense(rng.standard_normal(space.dim))
            sequence = [_unit(space, x + d * t) for t in steps]
            reports = [nabla_check(space, xk) for xk in sequence]
            for xk, report in zip(sequence, reports):
                if report.holds:
                    assert limit.deficiency <= report.deficiency + 2.0 * norm(space, x - xk) + 1e-9
            if reports[-1].holds:
                assert limit.holds
