import random

import pytest

from vlimits import generic
from vlimits.chipfire import (
    Divisor,
    Extension,
    Subdivision,
    admissible_representative,
    canonical_extension,
    direct_extension,
    fire,
    is_admissible,
    principal_divisor,
    pullback,
    single_vertex_extension,
    t_of,
)
from vlimits.cochain import Cochain0
from vlimits.graph import Graph, OrientedEdge
from vlimits.verify import chain_extensions, random_admissible_divisor, random_graph


def divisor(sub, mapping):
    return Divisor.from_mapping(sub, mapping)


def test_subdivision_labels(b2):
    sub = Subdivision(b2, [2, 3])
    assert sub.labels == ("u", "v", "z:e1:1", "z:e2:1", "z:e2:2")
    assert sub.chain(OrientedEdge(1, False)) == [0, 3, 4, 1]
    assert sub.chain(OrientedEdge(1, True)) == [1, 4, 3, 0]
    assert sub.scaled(2).num_vertices == 2 + 3 + 5


def test_subdivision_checks_lengths(b2):
    with pytest.raises(generic.RangeError):
        Subdivision(b2, [0, 1])
    with pytest.raises(generic.DomainError):
        Subdivision(b2, [1])


def test_principal_divisor():
    chain = Graph(["u", "v"], [("e", "u", "v")])
    sub = Subdivision(chain, [2])
    assert principal_divisor(Extension.constant(sub, 4)) == Divisor.zero(sub)
    func = Extension(sub, [0, 1, 1])
    assert principal_divisor(func).as_dict() == {"u": 1, "z:e:1": -1}


def test_principal_divisor_on_banana(b2):
    sub = Subdivision(b2, [2, 2])
    func = Extension(sub, [0, 1, 1, 0])
    assert principal_divisor(func).as_dict() == {"u": 1, "v": -1, "z:e1:1": -1, "z:e2:1": 1}


def test_admissible_and_t(b2):
    sub = Subdivision(b2, [2, 2])
    zero = Divisor.zero(sub)
    assert is_admissible(zero)
    assert [t_of(zero, oe) for oe in b2.oriented_edges()] == [0, 0, 0, 0]
    one = divisor(sub, {"z:e1:1": 1})
    assert is_admissible(one)
    assert t_of(one, OrientedEdge(0, False)) == 1
    assert t_of(one, OrientedEdge(1, False)) == 0
    assert not is_admissible(divisor(sub, {"z:e1:1": 2}))
    assert not is_admissible(divisor(Subdivision(b2, [3, 1]), {"z:e1:1": 1, "z:e1:2": 1}))


def test_single_vertex_extension(b2):
    sub = Subdivision(b2, [2, 2])
    ext = single_vertex_extension(divisor(sub, {"z:e1:1": 1}), "v")
    assert ext["v"] == 1 and ext["z:e1:1"] == 1
    assert ext["u"] == 0 and ext["z:e2:1"] == 0


def test_canonical_extension(b2):
    sub = Subdivision(b2, [2, 2])
    start = divisor(sub, {"z:e1:1": 1})
    zero = Cochain0.zero(b2)
    assert canonical_extension(zero, start) == Extension.constant(sub, 0)
    ones = canonical_extension(Cochain0.constant(b2, 1), start)
    assert ones == Extension.constant(sub, 1)
    assert principal_divisor(ones) == Divisor.zero(sub)
    ext = canonical_extension(Cochain0.indicator(b2, "v"), start)
    assert (ext["u"], ext["z:e1:1"], ext["z:e2:1"], ext["v"]) == (0, 1, 0, 1)


def test_canonical_extension_needs_admissible(b2):
    sub = Subdivision(b2, [2, 2])
    with pytest.raises(generic.DomainError):
        canonical_extension(Cochain0.zero(b2), divisor(sub, {"z:e1:1": 2}))


def test_fire(b2, edge):
    sub = Subdivision(b2, [2, 2])
    fired = fire(divisor(sub, {"z:e1:1": 1}), "v")
    assert fired.as_dict() == {"u": 1, "z:e2:1": 1, "v": -1}
    assert is_admissible(fired)
    plain = Subdivision(edge, [1])
    assert fire(Divisor.zero(plain), "v").as_dict() == {"u": 1, "v": -1}


def test_fire_twice_on_subdivided_edge(edge):
    sub = Subdivision(edge, [1], 2)
    once = fire(Divisor.zero(sub), "u")
    assert once.as_dict() == {"u": -1, "z:e:1": 1}
    assert fire(once, "v") == Divisor.zero(sub)


def test_firing_commutes_and_full_firing_is_identity():
    rng = random.Random(7)
    for _i in range(1000):
        graph = random_graph(rng, 4, 3)
        sub = Subdivision(graph, [rng.randint(1, 3) for _e in graph.edges], rng.randint(1, 2))
        start = random_admissible_divisor(sub, rng)
        u, v = rng.choice(graph.vertices), rng.choice(graph.vertices)
        assert fire(fire(start, u), v) == fire(fire(start, v), u)
        order = list(graph.vertices)
        rng.shuffle(order)
        result = start
        for vertex in order:
            result = fire(result, vertex)
        assert result == start


def test_direct_extension_matches_canonical():
    rng = random.Random(11)
    for _i in range(200):
        graph = random_graph(rng, 3, 2)
        sub = Subdivision(graph, [rng.randint(1, 3) for _e in graph.edges])
        start = random_admissible_divisor(sub, rng)
        f = Cochain0(graph, [rng.randint(-3, 3) for _v in graph.vertices])
        assert canonical_extension(f, start) == direct_extension(f, start)


def test_exhaustive_chain_search():
    rng = random.Random(3)
    for _i in range(100):
        graph = random_graph(rng, 3, 2)
        sub = Subdivision(graph, [rng.randint(1, 3) for _e in graph.edges])
        start = random_admissible_divisor(sub, rng)
        f = Cochain0(graph, [rng.randint(-3, 3) for _v in graph.vertices])
        ext = canonical_extension(f, start)
        for index in range(graph.num_edges):
            expected = tuple(ext.values[sub.interior(index, i)] for i in range(1, sub.chain_length(index)))
            assert chain_extensions(f, start, index) == [expected]


def test_admissible_representative(b2):
    sub = Subdivision(b2, [2, 2])
    heavy = divisor(sub, {"z:e1:1": 2})
    rep = admissible_representative(heavy)
    assert is_admissible(rep)
    assert rep.degree() == heavy.degree()
    assert rep.base_part() == heavy.base_part() + Cochain0(b2, [1, 1])
    assert admissible_representative(divisor(sub, {"z:e1:1": 1})) == divisor(sub, {"z:e1:1": 1})


def test_pullback(b2):
    sub = Subdivision(b2, [2, 2])
    start = divisor(sub, {"u": 3, "z:e1:1": 1})
    assert pullback(start, 1) == start
    doubled = pullback(start, 2)
    assert doubled.as_dict() == {"u": 3, "z:e1:2": 1}
    assert pullback(Divisor.zero(sub), 3) == Divisor.zero(sub.scaled(3))
    with pytest.raises(generic.DomainError):
        pullback(doubled, 3)
