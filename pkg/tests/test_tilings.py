import random
from fractions import Fraction

import pytest

from vlimits import generic
from vlimits.cochain import Cochain0, Cochain1
from vlimits.slopes import SlopeContext
from vlimits.tilings import (
    BOUNDARY,
    INTERIOR,
    OUTSIDE,
    QuadraticForm,
    default_f_box,
    enumerate_tiles,
    lattice_coordinates,
    lattice_generators,
    mixed_tile,
    mixed_tile_of,
    sample_points,
    standard_tile,
    tiling_picture,
    vor_member,
    voronoi_position,
)


def point(graph, mapping):
    return Cochain0.from_mapping(graph, mapping)


def test_quadratic_form(b2, edge):
    eta = point(b2, {"u": -1, "v": 1})
    assert QuadraticForm(b2).q(eta) == Fraction(1, 2)
    assert QuadraticForm(b2).q(Cochain0.zero(b2)) == 0
    assert QuadraticForm(edge).q(point(edge, {"u": -1, "v": 1})) == 1
    assert QuadraticForm(b2).potential(eta).values == (0, Fraction(1, 2))


def test_quadratic_form_is_positive(tri, complete4):
    rng = random.Random(5)
    for graph in (tri, complete4):
        form = QuadraticForm(graph)
        for _i in range(200):
            eta = Cochain0.zero(graph)
            for gen in lattice_generators(graph):
                eta = eta + Fraction(rng.randint(-9, 9), rng.randint(1, 7)) * gen
            if not eta.is_zero():
                assert form.q(eta) > 0


def test_gram_matrix(tri):
    gram = QuadraticForm(tri).gram_matrix()
    assert gram[0][1] == gram[1][0]
    assert gram[0][0] > 0 and gram[1][1] > 0


def test_degree_must_vanish(b2):
    with pytest.raises(generic.DomainError):
        QuadraticForm(b2).q(point(b2, {"v": 1}))


def test_voronoi_position(b2):
    assert voronoi_position(Cochain0.zero(b2), b2) == INTERIOR
    assert voronoi_position(point(b2, {"u": -1, "v": 1}), b2) == BOUNDARY
    assert voronoi_position(point(b2, {"u": Fraction(-3, 2), "v": Fraction(3, 2)}), b2) == OUTSIDE


def test_vor_member(b2):
    origin = Cochain0.zero(b2)
    assert vor_member(origin, origin, b2)
    assert vor_member(point(b2, {"u": -1, "v": 1}), origin, b2)
    assert not vor_member(point(b2, {"u": Fraction(-3, 2), "v": Fraction(3, 2)}), origin, b2)
    beta = point(b2, {"u": -2, "v": 2})
    assert lattice_coordinates(beta, b2).values == (0, 1)
    assert vor_member(point(b2, {"u": Fraction(-3, 2), "v": Fraction(3, 2)}), beta, b2)
    with pytest.raises(generic.DomainError):
        vor_member(origin, point(b2, {"u": -1, "v": 1}), b2)


def test_hexagonal_cell(tri):
    # vertex of the hexagonal cell, equidistant from O, Laplacian(chi_b) and -Laplacian(chi_a)
    corner = point(tri, {"a": -1, "b": 1})
    assert voronoi_position(corner, tri) == BOUNDARY
    assert voronoi_position(Fraction(1, 2) * corner, tri) == INTERIOR
    assert voronoi_position(2 * corner, tri) == OUTSIDE


def test_standard_tile(b2):
    tile = standard_tile(b2, Cochain0.indicator(b2, "v"))
    assert tile.center == point(b2, {"u": -2, "v": 2})
    assert tile.position(point(b2, {"u": -2, "v": 2})) == INTERIOR


def test_mixed_tile(b2):
    ctx = SlopeContext(b2, [2, 3])
    assert mixed_tile(ctx, Cochain0.indicator(b2, "v")) is None
    tile = mixed_tile(ctx, Cochain0.zero(b2))
    assert tile.center.is_zero()
    assert tile.subgraph.num_edges == 2


def test_mixed_tile_of(b2):
    ctx = SlopeContext(b2, [1, 1])
    assert mixed_tile_of(ctx, Cochain0.zero(b2)).f.is_zero()
    match = mixed_tile_of(ctx, point(b2, {"u": -2, "v": 2}))
    assert match.f == Cochain0.indicator(b2, "v")
    assert not match.boundary
    middle = mixed_tile_of(ctx, point(b2, {"u": -1, "v": 1}))
    assert middle.boundary
    assert sorted(t.f.values for t in middle.tiles) == [(0, 0), (0, 1)]


def test_mixed_tiles_cover_samples(b2, tri):
    for ctx in (SlopeContext(b2, [1, 2]), SlopeContext(tri, [1, 2, 1])):
        reach = Cochain0.zero(ctx.graph)
        for gen in lattice_generators(ctx.graph):
            reach = reach + gen
        tiles, _skipped = enumerate_tiles(ctx, default_f_box(ctx, reach))
        for eta in sample_points(ctx.graph, 200, random.Random(1)):
            positions = [tile.position(eta) for tile in tiles]
            inside = [p for p in positions if p != OUTSIDE]
            assert inside
            assert sum(1 for p in positions if p == INTERIOR) <= 1
            if len(inside) == 1:
                assert inside[0] == INTERIOR


def test_twisted_tiles(b2):
    ctx = SlopeContext(b2, [2, 2], Cochain1(b2, [1, 1]))
    tiles, skipped = enumerate_tiles(ctx, 3)
    assert skipped > 0
    match = mixed_tile_of(ctx, Cochain0.zero(b2), tiles=tiles)
    assert match.tiles


def test_tiles_need_n_one(b2):
    ctx = SlopeContext(b2, [1, 1], n=2)
    with pytest.raises(generic.DomainError):
        enumerate_tiles(ctx, 2)


def test_picture(b2, tri, complete4):
    line = tiling_picture(SlopeContext(b2, [1, 1]), 8)
    assert line.dim == 1
    assert len(line.samples) == 8
    assert line.sidecar()["tiles"]
    plane = tiling_picture(SlopeContext(tri, [1, 1, 1]), 6)
    assert plane.dim == 2
    assert len(plane.samples) == 36
    with pytest.raises(generic.DomainError):
        tiling_picture(SlopeContext(complete4, [1] * 6))
