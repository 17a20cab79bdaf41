"""
Unit tests for absolute sums, their vertex model and the nabla transfer checks
"""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import NotOnSphere
from src.core.norms import norm
from src.core.space import AbsoluteSum, Lp, PolytopeV, l1, linf, real_line
from src.core.vector import SparseVector
from src.diag.report import Verdict
from src.polytope.realize import to_vball
from src.sums.absolute import SumPoint, check_absolute_norm, pair, sphere_samples, sum_norm
from src.sums.ball import quadrant_vertices, sum_generators
from src.sums.transfer import check_l1_transfer, check_linf_characterization, is_daugavet, shadow_battery


def e(i, value=1.0):
    return SparseVector.basis(i, value)


def vec(*values):
    return SparseVector.from_dense(values)


def test_sum_point_embedding():
    """Test the right block is shifted past the left one."""
    point = SumPoint(vec(1, 2), vec(3))
    assert point.embed(2) == vec(1, 2, 3)
    assert SumPoint.split(vec(1, 2, 3), 2) == point


@pytest.mark.parametrize("space, point, expected", [
    (AbsoluteSum(l1(2), linf(2), linf(2)), SumPoint(vec(1, 1), vec(1, -1)), 2.0),
    (AbsoluteSum(Lp(2.0, 2), real_line(), real_line()), SumPoint(e(1), e(1)), math.sqrt(2.0)),
    (AbsoluteSum(linf(2), l1(2), real_line()), SumPoint(vec(0.5, 0.5), e(1, -0.25)), 1.0),
])
def test_sum_norm(space, point, expected):
    """Test N(||x||, ||y||) on worked examples."""
    assert sum_norm(space, point) == pytest.approx(expected)
    assert norm(space, point.embed(space.left.dim)) == pytest.approx(expected)


@pytest.mark.parametrize("norm2d, expected", [
    (l1(2), True),
    (Lp(2.0, 2), True),
    (linf(2), True),
    (PolytopeV((e(1), -e(1), e(2), -e(2), vec(1, 1), vec(-1, -1)), 2), False),
    (PolytopeV((e(1, 2.0), e(1, -2.0), e(2), -e(2)), 2), False),
])
def test_check_absolute_norm(norm2d, expected):
    """Test absoluteness and normalization detection."""
    assert check_absolute_norm(norm2d) == expected


def test_pair():
    """Test the planar helper vector."""
    assert pair(0.5, 0.0) == e(1, 0.5)


def test_sphere_samples_are_unit():
    """Test seeded sphere samples of an l_2 sum."""
    space = AbsoluteSum(Lp(2.0, 2), l1(2), real_line())
    samples = sphere_samples(space, 6, seed=1)
    assert len(samples) == 6
    assert samples == sphere_samples(space, 6, seed=1)
    for p in samples:
        assert norm(space, p) == pytest.approx(1.0)


def test_quadrant_vertices():
    """Test positive-quadrant vertices of the l_1 and l_inf planes."""
    assert quadrant_vertices(AbsoluteSum(l1(2), real_line(), real_line())) == [(1.0, 0.0), (0.0, 1.0)]
    assert (1.0, 1.0) in quadrant_vertices(AbsoluteSum(linf(2), real_line(), real_line()))


def test_sum_generators_l1():
    """Test the l_1 sum ball is the hull of the two embedded part balls."""
    space = AbsoluteSum(l1(2), linf(2), real_line())
    generators = sum_generators(space)
    assert len(generators) == 4 + 2
    assert e(3) in generators


@pytest.mark.parametrize("space", [
    AbsoluteSum(l1(2), linf(2), real_line()),
    AbsoluteSum(linf(2), l1(2), real_line()),
    AbsoluteSum(linf(2), real_line(), real_line()),
])
@settings(max_examples=25, deadline=None)
@given(values=st.lists(st.floats(min_value=-2, max_value=2, allow_nan=False), min_size=3, max_size=3))
def test_vertex_model_matches_closed_form(space, values):
    """Test the sum ball gauge against N(||x||, ||y||)."""
    x = SparseVector.from_dense(values[:space.dim])
    assert to_vball(space).gauge(x) == pytest.approx(norm(space, x), abs=1e-8)


@pytest.mark.parametrize("X, x, expected", [
    (real_line(), e(1), (True, True)),
    (linf(2), vec(1, 1), (True, True)),
    (linf(2), e(1), (False, False)),
    (l1(2), vec(0.5, 0.5), (False, False)),
])
def test_l1_transfer(X, x, expected):
    """Test nabla verdicts agree between X and X (+)_1 R."""
    assert check_l1_transfer(X, x, real_line()) == expected


def test_l1_transfer_needs_unit_vector():
    """Test off-sphere x is rejected."""
    with pytest.raises(NotOnSphere):
        check_l1_transfer(l1(2), e(1, 2.0), real_line())


@pytest.mark.parametrize("x, y, expected", [
    (e(1), e(1), (True, True)),
    (e(1), SparseVector(), (False, False)),
    (e(1, -1.0), e(1), (True, True)),
])
def test_linf_characterization(x, y, expected):
    """Test (x, y) in R (+)_inf R is nabla iff both parts are."""
    assert check_linf_characterization(real_line(), x, real_line(), y) == expected


def test_finite_dimensions_have_no_daugavet_points():
    """Test the Daugavet predicate."""
    assert not is_daugavet(l1(3), e(1))


def test_shadow_battery_never_holds():
    """Test sampled verdicts of a curved sum are never exact Holds."""
    space = AbsoluteSum(Lp(2.0, 2), real_line(), real_line())
    reports = shadow_battery(space, 5, seed=3)
    assert len(reports) == 5
    assert all(r.verdict != Verdict.HOLDS for r in reports)
