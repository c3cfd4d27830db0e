import json
import random
from fractions import Fraction

import pytest

from vlimits import loader, verify
from vlimits.cochain import Cochain0, Cochain1, d_star
from vlimits.slopes import SlopeContext, TruncationWindow, integral_subgraph
from vlimits.tilings import enumerate_tiles
from vlimits.toric import (
    CellIndex,
    CharacterPair,
    check_cycle_equations,
    default_window,
    degenerates,
    describe,
    orbit_dimension,
    y_census,
)
from vlimits.toric.characters import cell_point

HALF = Fraction(1, 2)


def b2_census(b2, window=None):
    ctx = SlopeContext(b2, [1, 1])
    if window is None:
        window = TruncationWindow(2, 8, 2)
    return y_census(ctx, CharacterPair(b2), Cochain0(b2, [1, 1]), window)


def test_banana_census(b2):
    census = b2_census(b2)
    steps = [Fraction(k, 2) for k in range(-4, 5)]
    assert census.cells() == [CellIndex.from_values(b2, [t, t]) for t in steps]
    assert census.complete
    assert census.connected is True
    assert census.is_path()
    assert len(census.hasse) == 8
    assert census.classes == list(range(9))


def test_banana_descriptor(b2):
    census = b2_census(b2)
    desc = census.descriptor(CellIndex.from_values(b2, [HALF, HALF]))
    assert desc.n == 2
    assert desc.f.values == (0, 1)
    assert desc.degrees.values == (1, -1)
    assert desc.total_degree() == 2
    assert desc.point.coords == {}
    top = census.descriptor(CellIndex.from_values(b2, [0, 0]))
    assert top.n == 1
    assert top.point.as_dict() == {"e1": (1, 1), "e2": (1, 1)}
    assert top.total_degree() == 2


def test_degenerates(b2):
    census = b2_census(b2)
    zero = census.descriptor(CellIndex.from_values(b2, [0, 0]))
    node = census.descriptor(CellIndex.from_values(b2, [HALF, HALF]))
    one = census.descriptor(CellIndex.from_values(b2, [1, 1]))
    assert degenerates(node, zero)
    assert degenerates(node, one)
    assert not degenerates(zero, node)
    assert not degenerates(zero, one)


def test_describe_canonicalizes(b2):
    ctx = SlopeContext(b2, [1, 1], n=2)
    desc = describe(ctx, CharacterPair(b2), Cochain0.zero(b2), Cochain0(b2, [3, 4]))
    assert desc.f.values == (0, 1)
    assert desc.cell == CellIndex.from_values(b2, [HALF, HALF])


def test_small_box_is_incomplete(b2):
    census = b2_census(b2, TruncationWindow(1, 2, 2))
    assert not census.complete
    assert census.connected is None
    assert len(census) == 5


def test_theta_census(theta3):
    ctx = SlopeContext(theta3, [1, 1, 1])
    window = default_window(ctx, 2, 1)
    census = y_census(ctx, CharacterPair(theta3), Cochain0.zero(theta3), window)
    keys = ["(-1,-1,-1)", "(-1/2,-1/2,-1/2)", "(0,0,0)", "(1/2,1/2,1/2)", "(1,1,1)"]
    assert [c.key() for c in census.cells()] == keys
    assert census.is_path()
    top = census.descriptor(CellIndex.from_values(theta3, [0, 0, 0]))
    assert top.dimension() == 3
    assert orbit_dimension(top.point) == 1


def test_edge_census(edge):
    ctx = SlopeContext(edge, [2])
    census = y_census(ctx, CharacterPair(edge, [3]), Cochain0.zero(edge), default_window(ctx, 1, 2))
    assert census.is_path()
    assert census.connected is True
    assert len(census) == 9
    assert census.descriptor(CellIndex.from_values(edge, [1])).point.as_dict() == {"e": (3, 1)}


def test_document_roundtrip(b2, tmp_path):
    census = b2_census(b2)
    document = census.to_document()
    assert document["window"] == {"n_max": 2, "f_box": 8, "radius": 2}
    assert document["rescaled"] == 1
    assert document["hasse"][0] == ["(-2,-2)", "(-3/2,-3/2)"]
    path = tmp_path / "census.json"
    path.write_text(json.dumps(document))
    assert loader.load_census(str(path)) == loader.census_records(census)


def test_twisted_census_is_rescaled(b2):
    ctx = SlopeContext(b2, [1, 1], Cochain1(b2, [HALF, -HALF]), n=2)
    census = y_census(ctx, CharacterPair(b2), Cochain0.zero(b2), TruncationWindow(1, 6, 1))
    assert census.factor == 2
    assert len(census) > 0


def test_top_cells_match_tile_centers(b2):
    ctx = SlopeContext(b2, [1, 1])
    census = y_census(ctx, CharacterPair(b2), Cochain0(b2, [1, 1]), TruncationWindow(1, 3, 7))
    top = [desc.cell for desc in census.limits if integral_subgraph(ctx, desc.f).is_connected()]
    tiles, skipped = enumerate_tiles(ctx, 3)
    assert skipped == 0
    assert len(top) == len(tiles) == 7
    assert {d_star(cell.alpha) for cell in top} == {tile.center for tile in tiles}


@pytest.mark.parametrize("name", ["b2.json", "triangle.json", "theta.json", "twisted.json"])
def test_census_tiling_consistency(load_input, name):
    assert verify.check_consistency(load_input(name), random.Random(0), 0) == []


@pytest.mark.parametrize("name", ["b2.json", "theta.json", "triangle.json"])
def test_census_points_satisfy_cycle_equations(load_input, name):
    data = load_input(name)
    ctx = data.slope_context()
    census = y_census(ctx, data.characters(), data.bdeg, default_window(ctx, 2, 1))
    assert len(census) > 0
    rng = random.Random(17)
    pairs = [CharacterPair.random(data.graph, rng) for _i in range(100)]
    for desc in census.limits:
        sub = ctx.with_n(desc.n)
        assert desc.total_degree() == data.bdeg.degree()
        for pair in pairs:
            assert check_cycle_equations(sub, pair, desc.f, cell_point(desc.cell, pair))
