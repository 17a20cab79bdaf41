"""
Unit tests for sparse vectors, space descriptors and the norm dispatch
"""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import BadIndex, InvalidDescriptor, OutOfDimension
from src.core.norms import dual_norm, norm
from src.core.pnorm import INF, dual_exponent, p_norm, top_up
from src.core.space import (
    AbsoluteSum, Lp, PolytopeV, ProjTensor, Renormed, SliceSpec, describe, l1, linf, real_line,
)
from src.core.vector import SparseVector, pairing, split_parts


def e(i, value=1.0):
    return SparseVector.basis(i, value)


finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


def dense_vectors(dim):
    return st.lists(finite, min_size=dim, max_size=dim).map(SparseVector.from_dense)


SPACES = [l1(4), Lp(2.0, 4), linf(4), Lp(3.0, 4), Renormed(Lp(2.0, 4)), Renormed(l1(4)), Renormed(linf(4))]


def test_zero_entries_are_dropped():
    """Test canonical form: stored values are all nonzero."""
    v = SparseVector({1: 0.0, 2: 1.5, 5: 0})
    assert v.support() == (2,)
    assert (e(3) - e(3)).is_zero()


def test_indices_are_one_based():
    """Test that coordinate 0 is rejected."""
    with pytest.raises(BadIndex):
        SparseVector({0: 1.0})


def test_json_round_trip():
    """Test the index-map encoding."""
    v = SparseVector({1: 0.25, 7: -3.0})
    assert v.to_json() == {"1": 0.25, "7": -3.0}
    assert SparseVector.from_json(v.to_json()) == v


def test_to_dense_rejects_short_dimension():
    """Test densifying into a too-small dimension."""
    with pytest.raises(BadIndex):
        e(4).to_dense(3)


def test_shift_and_restrict():
    """Test re-indexing helpers."""
    v = SparseVector({1: 1.0, 2: 2.0, 3: 3.0})
    assert v.restrict(lambda i: i > 1).shift(-1) == SparseVector({1: 2.0, 2: 3.0})
    assert v.max_index() == 3
    assert SparseVector().max_index() == 0


@pytest.mark.parametrize("x, expected", [
    (e(1), (1.0, SparseVector(), SparseVector())),
    (e(1) - e(3, 2.0), (1.0, SparseVector(), e(3, 2.0))),
    (e(2, 0.5) - e(4, 0.25), (0.0, e(2, 0.5), e(4, 0.25))),
])
def test_split_parts(x, expected):
    """Test the e1 / positive / negative decomposition."""
    c, plus, minus = split_parts(x)
    assert (c, plus, minus) == expected
    assert e(1, c) + plus - minus == x


@pytest.mark.parametrize("f, x, expected", [
    (e(1), e(1), 1.0),
    (e(1) - e(2), e(1) + e(2, 2.0), -1.0),
    (SparseVector(), e(1) + e(5), 0.0),
])
def test_pairing(f, x, expected):
    """Test the dual pairing."""
    assert pairing(f, x) == expected


@pytest.mark.parametrize("space, x, expected", [
    (l1(3), e(1) + e(2), 2.0),
    (Renormed(Lp(2.0, 4)), e(1) + e(2, 2.0), 1.0),
    (Renormed(Lp(2.0, 4)), e(3, -2.0), 2.0),
    (linf(3), SparseVector.from_dense([0.5, -2.0, 1.0]), 2.0),
    (Lp(2.0, 2), SparseVector.from_dense([3.0, 4.0]), 5.0),
])
def test_norm_examples(space, x, expected):
    """Test norm values on worked examples."""
    assert norm(space, x) == pytest.approx(expected, abs=1e-12)


def test_norm_out_of_dimension():
    """Test support beyond dim raises OutOfDimension."""
    with pytest.raises(OutOfDimension):
        norm(l1(2), e(3))


def test_polytope_must_be_symmetric():
    """Test PolytopeV rejects a generator set not closed under negation."""
    with pytest.raises(InvalidDescriptor):
        PolytopeV((e(1), -e(1), e(2)), 2)


def test_polytope_must_span():
    """Test PolytopeV rejects a flat generator set."""
    with pytest.raises(InvalidDescriptor):
        PolytopeV((e(1), -e(1)), 2)


def test_lp_rejects_small_exponent():
    """Test p < 1 is rejected."""
    with pytest.raises(InvalidDescriptor):
        Lp(0.5, 3)


def test_renormed_needs_two_coordinates():
    """Test the renorming needs dim >= 2."""
    with pytest.raises(InvalidDescriptor):
        Renormed(Lp(2.0, 1))


def test_sum_needs_planar_norm():
    """Test AbsoluteSum rejects a norm2d that is not 2-dimensional."""
    with pytest.raises(InvalidDescriptor):
        AbsoluteSum(l1(3), real_line(), real_line())


def test_sum_rejects_non_absolute_norm():
    """Test a hexagonal norm with N(1,-1) != N(1,1) is refused on evaluation."""
    hexagon = PolytopeV(
        (e(1), -e(1), e(2), -e(2), e(1) + e(2), -(e(1) + e(2))), 2
    )
    space = AbsoluteSum(hexagon, real_line(), real_line())
    with pytest.raises(InvalidDescriptor):
        norm(space, e(1))


def test_slice_needs_positive_depth():
    """Test SliceSpec rejects alpha <= 0."""
    with pytest.raises(InvalidDescriptor):
        SliceSpec(e(1), 0.0)
    assert SliceSpec(e(1), 0.25).level == 0.75


def test_dimensions():
    """Test dim for composite descriptors."""
    assert AbsoluteSum(l1(2), linf(3), real_line()).dim == 4
    assert ProjTensor(l1(2), linf(3)).dim == 6
    assert ProjTensor(l1(2), linf(3)).shape == (2, 3)


@pytest.mark.parametrize("space, text", [
    (real_line(), "R"),
    (linf(3), "l_inf^3"),
    (Renormed(Lp(2.0, 4)), "renorm(l_2^4)"),
    (AbsoluteSum(l1(2), real_line(), real_line()), "(R (+)_l_1^2 R)"),
])
def test_describe(space, text):
    """Test canonical text rendering."""
    assert describe(space) == text


def test_pnorm_helpers():
    """Test exponent conjugation and top-up coefficients."""
    assert dual_exponent(1) == INF
    assert dual_exponent(INF) == 1.0
    assert dual_exponent(2.0) == 2.0
    assert p_norm([], 2.0) == 0.0
    assert top_up(0.5, 2.0) == pytest.approx(math.sqrt(0.75))
    assert top_up(0.3, INF) == 1.0
    assert top_up(1.0, 1.0) == 0.0


def test_dual_norm_dispatch():
    """Test dual norms of l_p and renormed spaces."""
    assert dual_norm(l1(3), SparseVector.from_dense([1.0, -3.0, 2.0])) == 3.0
    assert dual_norm(Renormed(Lp(2.0, 3)), e(2)) == pytest.approx(2.0)
    assert dual_norm(Renormed(l1(3)), e(1) - e(2)) == pytest.approx(1.0)


@pytest.mark.parametrize("space", SPACES)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_symmetry_and_homogeneity(space, data):
    """Test ||-x|| = ||x|| and ||t x|| = t ||x||."""
    x = data.draw(dense_vectors(space.dim))
    t = data.draw(st.floats(min_value=0, max_value=5, allow_nan=False))
    base = norm(space, x)
    assert norm(space, -x) == pytest.approx(base, rel=1e-12, abs=1e-12)
    assert norm(space, x * t) == pytest.approx(t * base, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("space", SPACES)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_triangle_inequality(space, data):
    """Test ||x + y|| <= ||x|| + ||y||."""
    x = data.draw(dense_vectors(space.dim))
    y = data.draw(dense_vectors(space.dim))
    assert norm(space, x + y) <= norm(space, x) + norm(space, y) + 1e-9
