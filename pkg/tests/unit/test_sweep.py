"""
Unit tests for the renorming sweep table
"""
import math

import pytest

from src.cli.sweep import CONSTRUCTIONS, COLUMNS, build_sweep, deficiency_proxy, sweep_csv, witness_distance
from src.core.errors import InvalidDescriptor, SizeLimit
from src.core.norms import dual_norm
from src.core.space import Lp, Renormed
from src.core.vector import pairing
from src.renorm.formulas import E1, exposure_margin, extreme_samples, recomputed_margin, supporting_grid


@pytest.mark.parametrize("p", [1.0, 2.0, math.inf])
def test_supporting_grid_functionals(p):
    """Test each grid functional has dual norm 1 and attains it at e1."""
    space = Renormed(Lp(p, 5))
    for f in supporting_grid(space):
        assert dual_norm(space, f) == pytest.approx(1.0)
        assert pairing(f, E1) == pytest.approx(1.0)


def test_witness_distance_is_two():
    """Test the primal witness sits at distance 2 from e1 for every n."""
    for n in range(2, 9):
        assert witness_distance(Renormed(Lp(2.0, n))) == pytest.approx(2.0)


def test_deficiency_proxy_is_bounded():
    """Test the proxy lies in [0, 2] and shrinks with the slice depth."""
    space = Renormed(Lp(2.0, 4))
    extremes = extreme_samples(space, 8, seed=1)
    deep = deficiency_proxy(space, 0.5, extremes)
    shallow = deficiency_proxy(space, 0.01, extremes)
    assert 0.0 <= deep <= shallow <= 2.0


def test_build_sweep_shape():
    """Test one row per (n, alpha) in n order."""
    frame = build_sweep([4, 2, 3], [0.5, 0.1], samples=4)
    assert list(frame.columns) == COLUMNS
    assert len(frame) == 6
    assert frame["n"].tolist() == [2, 2, 3, 3, 4, 4]
    assert frame["alpha"].tolist() == [0.5, 0.1] * 3
    assert (frame["witness_distance"] - 2.0).abs().max() < 1e-9


def test_exposure_margin_column():
    """Test the l_2 margin column equals (n-1)^(-1/2) and is nonincreasing."""
    frame = build_sweep(range(2, 8), [0.25], samples=2)
    expected = [(n - 1) ** -0.5 for n in range(2, 8)]
    assert frame["exposure_margin"].tolist() == pytest.approx(expected)
    margins = frame["exposure_margin"].tolist()
    assert all(a >= b for a, b in zip(margins, margins[1:]))


def test_build_sweep_errors():
    """Test unknown constructions and dimensions above the cap."""
    with pytest.raises(InvalidDescriptor):
        build_sweep([2], [0.5], construction="renorm-l3")
    with pytest.raises(SizeLimit):
        build_sweep([2, 17], [0.5])


def test_sweep_csv_format():
    """Test header, LF endings and compact numbers."""
    text = sweep_csv(build_sweep([2], [0.5], construction="renorm-l1", samples=2))
    lines = text.split("\n")
    assert lines[0] == ",".join(COLUMNS)
    assert lines[1].startswith("2,0.5,")
    assert lines[1].endswith(",1,2")
    assert text.endswith("\n")
    assert "\r" not in text


@pytest.mark.parametrize("construction", sorted(CONSTRUCTIONS))
def test_margin_column_is_recomputed(construction):
    """Test the closed-form margin agrees with the gap over the sampled extremes for every construction."""
    frame = build_sweep(range(2, 9), [0.5], construction=construction, samples=4)
    for n, margin in zip(frame["n"], frame["exposure_margin"]):
        space = Renormed(Lp(CONSTRUCTIONS[construction], int(n)))
        assert margin == pytest.approx(recomputed_margin(space, extreme_samples(space, 4, 2024)), abs=1e-12)
        assert margin == pytest.approx(exposure_margin(space))
