from vlimits.cochain import Cochain1, d_star
from vlimits.lattice import (
    coboundary_image_index,
    cycle_basis,
    jacobian_invariants,
    lattice_index,
    spanning_tree_count,
)


def test_spanning_trees(b2, edge, tri, theta3, complete4):
    assert [spanning_tree_count(g) for g in (b2, edge, tri, theta3, complete4)] == [2, 1, 3, 3, 16]


def test_lattice_index(b2, edge, tri, theta3, complete4):
    assert [lattice_index(g) for g in (b2, edge, tri, theta3, complete4)] == [2, 1, 3, 3, 16]


def test_kirchhoff_on_random_graphs(random_graphs):
    for graph in random_graphs:
        assert lattice_index(graph) == spanning_tree_count(graph)


def test_jacobian_invariants(b2, edge, tri, complete4):
    assert jacobian_invariants(b2) == [2]
    assert jacobian_invariants(edge) == []
    assert jacobian_invariants(tri) == [3]
    assert jacobian_invariants(complete4) == [4, 4]


def test_coboundary_image_index(b2, complete4):
    assert coboundary_image_index(b2) == 1
    assert coboundary_image_index(complete4) == 1


def test_cycle_basis(b2, edge, theta3, tri):
    assert len(cycle_basis(edge)) == 0
    basis = cycle_basis(b2)
    assert [c.values for c in basis] == [(-1, 1)]
    assert basis.chord_ids() == ["e2"]
    assert [c.values for c in cycle_basis(theta3)] == [(-1, 1, 0), (-1, 0, 1)]
    assert [c.values for c in cycle_basis(tri)] == [(-1, -1, 1)]


def test_cycle_basis_is_closed_and_saturated(random_graphs):
    for graph in random_graphs:
        basis = cycle_basis(graph)
        assert len(basis) == graph.genus()
        assert basis.is_saturated()
        for cycle in basis:
            assert d_star(cycle).is_zero()


def test_coordinates(theta3):
    basis = cycle_basis(theta3)
    gamma = basis.combination([2, -3])
    assert basis.coordinates(gamma) == (2, -3)
    assert basis.coordinates(Cochain1(theta3, [1, 0, 0])) is None
    assert not basis.contains(Cochain1(theta3, ["-1/2", "1/2", 0]))
