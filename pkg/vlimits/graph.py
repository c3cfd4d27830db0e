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


import collections

import networkx as nx

from vlimits import generic

Edge = collections.namedtuple("Edge", ["id", "tail", "head"])

"""
Edge of the graph together with a direction. C{reverse} is C{False} for the
stored orientation e and C{True} for the opposite edge ē.
"""
OrientedEdge = collections.namedtuple("OrientedEdge", ["index", "reverse"])


class Graph:
    """
    Finite multigraph without loops, each edge with a fixed orientation tail -> head.

    Vertices and edges keep the order of the input; everything computed from a
    graph iterates in that order.

    @ivar vertices: Vertex ids.
    @type vertices: C{tuple} of C{str}

    @ivar edges: Edges, with tail and head given as vertex ids.
    @type edges: C{tuple} of L{Edge}

    @ivar parent_edges: For spanning subgraphs: index of each edge in the graph it was taken from.
    @type parent_edges: C{tuple} of C{int} or C{None}
    """

    def __init__(self, vertices, edges, connected=True, parent_edges=None):
        self.vertices = tuple(vertices)
        self.edges = tuple(Edge(*edge) for edge in edges)
        self.parent_edges = None if parent_edges is None else tuple(parent_edges)

        if len(self.vertices) == 0:
            raise generic.DomainError("A graph needs at least one vertex")

        self.vertex_index = {}
        for i, v in enumerate(self.vertices):
            if v in self.vertex_index:
                raise generic.DomainError('Duplicate vertex id "{}"'.format(v))
            self.vertex_index[v] = i

        self.edge_index = {}
        for i, edge in enumerate(self.edges):
            if edge.id in self.edge_index:
                raise generic.DomainError('Duplicate edge id "{}"'.format(edge.id))
            for end in (edge.tail, edge.head):
                if end not in self.vertex_index:
                    raise generic.DomainError('Edge "{}" refers to unknown vertex "{}"'.format(edge.id, end))
            if edge.tail == edge.head:
                raise generic.DomainError('Edge "{}" is a loop at "{}"'.format(edge.id, edge.tail))
            self.edge_index[edge.id] = i

        self._tails = tuple(self.vertex_index[e.tail] for e in self.edges)
        self._heads = tuple(self.vertex_index[e.head] for e in self.edges)

        if connected and not self.is_connected():
            raise generic.DomainError("The graph is not connected")

    def __repr__(self):
        return "Graph({} vertices, {} edges)".format(len(self.vertices), len(self.edges))

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    def tail(self, oe):
        """
        Index of the tail vertex of an oriented edge.

        @param oe: The oriented edge.
        @type  oe: L{OrientedEdge}

        @rtype: C{int}
        """
        return self._heads[oe.index] if oe.reverse else self._tails[oe.index]

    def head(self, oe):
        return self._tails[oe.index] if oe.reverse else self._heads[oe.index]

    def stored_tail(self, index):
        return self._tails[index]

    def stored_head(self, index):
        return self._heads[index]

    def oriented_edges(self):
        """
        All oriented edges: e, ē for every stored edge, in storage order.
        """
        for i in range(len(self.edges)):
            yield OrientedEdge(i, False)
            yield OrientedEdge(i, True)

    def oriented_label(self, oe):
        label = self.edges[oe.index].id
        return "~" + label if oe.reverse else label

    def to_networkx(self):
        """
        Multigraph view with integer vertex labels and the edge index as key.

        @rtype: C{networkx.MultiGraph}
        """
        g = nx.MultiGraph()
        g.add_nodes_from(range(len(self.vertices)))
        for i in range(len(self.edges)):
            g.add_edge(self._tails[i], self._heads[i], key=i, order=i)
        return g

    def components(self):
        """
        Connected components as sorted lists of vertex indices, ordered by their smallest vertex.
        """
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps)

    def is_connected(self):
        return nx.is_connected(self.to_networkx())

    def genus(self):
        """
        First Betti number |E| - |V| + #components.
        """
        return len(self.edges) - len(self.vertices) + len(self.components())

    def spanning_tree(self):
        """
        Deterministic spanning forest: Kruskal over the edges in storage order.

        @return: Indices of the forest edges, sorted.
        @rtype:  C{list} of C{int}
        """
        forest = nx.minimum_spanning_edges(
            self.to_networkx(), algorithm="kruskal", weight="order", keys=True, data=False
        )
        return sorted(key for _u, _v, key in forest)

    def spanning_subgraph(self, edge_indices):
        """
        Subgraph on all vertices with the given edges. It may be disconnected.

        @param edge_indices: Indices (in this graph) of the edges to keep.
        @type  edge_indices: Iterable of C{int}

        @rtype: L{Graph}
        """
        keep = sorted(set(edge_indices))
        return Graph(self.vertices, [self.edges[i] for i in keep], connected=False, parent_edges=keep)
