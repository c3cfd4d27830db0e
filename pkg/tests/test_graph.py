import pytest

from vlimits import generic
from vlimits.cochain import Cochain0, Cochain1, d, d_star, extend, laplacian, restrict
from vlimits.graph import Graph, OrientedEdge


def test_orientation(b2):
    e1 = OrientedEdge(0, False)
    back = OrientedEdge(0, True)
    assert b2.tail(e1) == 0 and b2.head(e1) == 1
    assert b2.tail(back) == 1 and b2.head(back) == 0
    assert b2.oriented_label(back) == "~e1"
    assert len(list(b2.oriented_edges())) == 4


def test_rejects_loops_and_duplicates():
    with pytest.raises(generic.DomainError):
        Graph(["u"], [("e", "u", "u")])
    with pytest.raises(generic.DomainError):
        Graph(["u", "u"], [])
    with pytest.raises(generic.DomainError):
        Graph(["u", "v"], [("e", "u", "v"), ("e", "v", "u")])
    with pytest.raises(generic.DomainError):
        Graph(["u", "v"], [("e", "u", "w")])
    with pytest.raises(generic.DomainError):
        Graph(["u", "v"], [])


def test_genus(b2, edge, tri, theta3, complete4):
    assert [g.genus() for g in (b2, edge, tri, theta3, complete4)] == [1, 0, 1, 2, 3]


def test_spanning_subgraph(b2):
    sub = b2.spanning_subgraph([1])
    assert sub.vertices == b2.vertices
    assert [e.id for e in sub.edges] == ["e2"]
    assert sub.parent_edges == (1,)
    empty = b2.spanning_subgraph([])
    assert not empty.is_connected()
    assert empty.components() == [[0], [1]]
    assert empty.genus() == 0


def test_spanning_tree_is_kruskal_in_storage_order(theta3, tri):
    assert theta3.spanning_tree() == [0]
    assert tri.spanning_tree() == [0, 1]


def test_coboundary(b2, tri):
    chi_v = Cochain0.indicator(b2, "v")
    assert d(chi_v).values == (1, 1)
    assert d(Cochain0.constant(b2, 5)).is_zero()
    assert d(Cochain0.indicator(tri, "c")).values == (0, 1, 1)


def test_coboundary_on_oriented_edges(b2):
    h = d(Cochain0.indicator(b2, "v"))
    assert h.value(OrientedEdge(0, False)) == 1
    assert h.value(OrientedEdge(0, True)) == -1


def test_d_star(b2):
    assert d_star(Cochain1.edge_basis(b2, "e1")) == Cochain0.from_mapping(b2, {"u": -1, "v": 1})
    assert d_star(Cochain1(b2, [1, 1])).as_dict() == {"u": -2, "v": 2}
    assert d_star(Cochain1(b2, [1, -1])).is_zero()


def test_laplacian(b2, tri):
    assert laplacian(Cochain0.indicator(b2, "v")).as_dict() == {"u": -2, "v": 2}
    assert laplacian(Cochain0.constant(tri, 3)).is_zero()
    assert laplacian(Cochain0.indicator(tri, "a")).as_dict() == {"a": 2, "b": -1, "c": -1}


def test_adjoint(tri):
    f = Cochain0(tri, [3, -1, 4])
    h = Cochain1(tri, [2, -5, 7])
    assert d(f).pairing(h) == f.pairing(d_star(h))


def test_degree_and_canonical(tri):
    f = Cochain0(tri, [2, 5, -1])
    assert f.degree() == 6
    assert f.canonical().values == (0, 3, -3)
    assert laplacian(f).degree() == 0


def test_restrict_extend(tri):
    sub = tri.spanning_subgraph([0, 2])
    h = Cochain1(tri, [1, 2, 3])
    small = restrict(h, sub)
    assert small.values == (1, 3)
    assert extend(small, tri).values == (1, 0, 3)


def test_cochains_on_other_graph_are_refused(b2, tri):
    with pytest.raises(generic.DomainError):
        Cochain0.zero(b2) + Cochain1.zero(b2)
    with pytest.raises(generic.DomainError):
        Cochain0(tri, [1, 2])
