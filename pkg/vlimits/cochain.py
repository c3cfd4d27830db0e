__license__ = """
VLimits is free software; you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation; either version 2 of the License, or
(at your option) any later version.

VLimits is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License along
with VLimits; if not, write to the Free Software Foundation, Inc.,
51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA."""


"""
Cochains of a graph and the complex C^0 --d--> C^1 --d*--> C^0.

A 1-cochain is stored on the stored orientation only; its value on the
opposite edge is the negative, so antisymmetry holds by construction.
"""
from fractions import Fraction

from vlimits import exact, generic


class _Cochain:
    """
    Common arithmetic of 0- and 1-cochains. Values are C{int} or L{Fraction}.

    @ivar graph: Graph the cochain lives on.
    @type graph: L{vlimits.graph.Graph}

    @ivar values: One value per vertex (resp. stored edge).
    @type values: C{tuple}
    """

    __slots__ = ("graph", "values")

    def __init__(self, graph, values):
        values = tuple(exact.normalize(v) for v in values)
        if len(values) != self._size(graph):
            raise generic.DomainError(
                "{} needs {:d} values, got {:d}".format(type(self).__name__, self._size(graph), len(values))
            )
        self.graph = graph
        self.values = values

    @staticmethod
    def _size(graph):
        raise NotImplementedError

    @classmethod
    def zero(cls, graph):
        return cls(graph, [0] * cls._size(graph))

    def _check_compatible(self, other):
        if type(other) is not type(self) or len(other.values) != len(self.values):
            raise generic.DomainError("Cochains live on different graphs")

    def __add__(self, other):
        self._check_compatible(other)
        return type(self)(self.graph, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check_compatible(other)
        return type(self)(self.graph, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return type(self)(self.graph, [-a for a in self.values])

    def __mul__(self, scalar):
        return type(self)(self.graph, [scalar * a for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return type(other) is type(self) and self.values == other.values

    def __hash__(self):
        return hash((type(self).__name__, self.values))

    def __repr__(self):
        return "{}{}".format(type(self).__name__, exact.format_vector(self.values))

    def is_zero(self):
        return all(v == 0 for v in self.values)

    def is_integral(self):
        return all(exact.is_integral(v) for v in self.values)

    def pairing(self, other):
        """
        The standard pairing. For 1-cochains the sum runs over stored edges,
        which is half the sum over all oriented edges.
        """
        self._check_compatible(other)
        return exact.normalize(sum((Fraction(a) * b for a, b in zip(self.values, other.values)), Fraction(0)))

    def key(self):
        return exact.format_vector(self.values)


class Cochain0(_Cochain):
    """
    Function on the vertices.
    """

    __slots__ = ()

    @staticmethod
    def _size(graph):
        return graph.num_vertices

    @classmethod
    def indicator(cls, graph, vertex):
        """
        The characteristic function chi_v.
        """
        values = [0] * graph.num_vertices
        values[graph.vertex_index[vertex]] = 1
        return cls(graph, values)

    @classmethod
    def constant(cls, graph, value=1):
        return cls(graph, [value] * graph.num_vertices)

    @classmethod
    def from_mapping(cls, graph, mapping):
        """
        Build from a dict vertex id -> value, missing vertices are 0.
        """
        for v in mapping:
            if v not in graph.vertex_index:
                raise generic.DomainError('Unknown vertex "{}"'.format(v))
        return cls(graph, [mapping.get(v, 0) for v in graph.vertices])

    def __getitem__(self, vertex):
        return self.values[self.graph.vertex_index[vertex]]

    def degree(self):
        return exact.normalize(sum(Fraction(v) for v in self.values))

    def minimum(self):
        return min(self.values)

    def canonical(self):
        """
        Translate so the first vertex has value 0.
        """
        base = self.values[0]
        return Cochain0(self.graph, [v - base for v in self.values])

    def as_dict(self):
        return dict(zip(self.graph.vertices, self.values))


class Cochain1(_Cochain):
    """
    Antisymmetric function on the oriented edges.
    """

    __slots__ = ()

    @staticmethod
    def _size(graph):
        return graph.num_edges

    @classmethod
    def edge_basis(cls, graph, edge_id):
        """
        The basis element chi_e - chi_ē for the stored orientation of C{edge_id}.
        """
        values = [0] * graph.num_edges
        values[graph.edge_index[edge_id]] = 1
        return cls(graph, values)

    @classmethod
    def from_mapping(cls, graph, mapping):
        """
        Build from a dict edge id -> value on the stored orientation, missing edges are 0.
        """
        for e in mapping:
            if e not in graph.edge_index:
                raise generic.DomainError('Unknown edge "{}"'.format(e))
        return cls(graph, [mapping.get(e.id, 0) for e in graph.edges])

    @classmethod
    def from_oriented(cls, graph, values):
        """
        Build from a dict oriented edge -> value, checking antisymmetry
        wherever both orientations are given.
        """
        stored = [None] * graph.num_edges
        for oe, value in values.items():
            value = -value if oe.reverse else value
            if stored[oe.index] is not None and stored[oe.index] != value:
                raise generic.DomainError(
                    'Values on edge "{}" are not antisymmetric'.format(graph.edges[oe.index].id)
                )
            stored[oe.index] = value
        return cls(graph, [0 if v is None else v for v in stored])

    def __getitem__(self, edge_id):
        return self.values[self.graph.edge_index[edge_id]]

    def value(self, oe):
        """
        Value on an oriented edge; value(ē) = -value(e).

        @param oe: The oriented edge.
        @type  oe: L{vlimits.graph.OrientedEdge}
        """
        v = self.values[oe.index]
        return -v if oe.reverse else v

    def integral_edges(self):
        return [i for i, v in enumerate(self.values) if exact.is_integral(v)]

    def as_dict(self):
        return {e.id: v for e, v in zip(self.graph.edges, self.values)}


def d(f):
    """
    Coboundary: d(f)(e) = f(head) - f(tail).

    @param f: 0-cochain.
    @type  f: L{Cochain0}

    @return: The 1-cochain df.
    @rtype:  L{Cochain1}
    """
    graph = f.graph
    return Cochain1(
        graph, [f.values[graph.stored_head(i)] - f.values[graph.stored_tail(i)] for i in range(graph.num_edges)]
    )


def d_star(h):
    """
    Adjoint of L{d}: d*(chi_e - chi_ē) = chi_head - chi_tail.

    @param h: 1-cochain.
    @type  h: L{Cochain1}

    @rtype: L{Cochain0}
    """
    graph = h.graph
    result = [0] * graph.num_vertices
    for i, value in enumerate(h.values):
        result[graph.stored_head(i)] += value
        result[graph.stored_tail(i)] -= value
    return Cochain0(graph, result)


def laplacian(f):
    """
    Graph Laplacian, d* o d.
    """
    return d_star(d(f))


def restrict(h, subgraph):
    """
    Restriction of a 1-cochain to the edges of a spanning subgraph.
    """
    return Cochain1(subgraph, [h.values[i] for i in subgraph.parent_edges])


def extend(h, graph):
    """
    Extension by zero of a 1-cochain on a spanning subgraph to the whole graph.
    """
    values = [0] * graph.num_edges
    for i, parent in enumerate(h.graph.parent_edges):
        values[parent] = h.values[i]
    return Cochain1(graph, values)
