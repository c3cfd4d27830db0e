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
Lattice data of a graph: Laplacian matrix, Kirchhoff counts, Smith normal
forms and the cycle lattice H^1(G, Z).
"""
import networkx as nx
from sympy import ZZ, Matrix, zeros
from sympy.matrices.normalforms import smith_normal_form

from vlimits import exact, generic
from vlimits.cochain import Cochain1, d_star


def laplacian_matrix(graph):
    """
    Laplacian matrix, rows and columns in vertex order.

    @rtype: C{sympy.Matrix}
    """
    n = graph.num_vertices
    m = zeros(n, n)
    for i in range(graph.num_edges):
        u, v = graph.stored_tail(i), graph.stored_head(i)
        m[u, u] += 1
        m[v, v] += 1
        m[u, v] -= 1
        m[v, u] -= 1
    return m


def reduced_laplacian(graph):
    """
    Laplacian with the row and column of the first vertex removed. Its columns
    are the coordinates of the Delta(chi_v), v != v_0, in the basis
    chi_v - chi_{v_0} of the degree-0 cochains.
    """
    m = laplacian_matrix(graph)
    return m[1:, 1:]


def incidence_matrix(graph):
    """
    Matrix of d*: column e is d*(chi_e - chi_ē) = chi_head - chi_tail.
    """
    m = zeros(graph.num_vertices, graph.num_edges)
    for i in range(graph.num_edges):
        m[graph.stored_head(i), i] += 1
        m[graph.stored_tail(i), i] -= 1
    return m


def smith_invariants(matrix):
    """
    Nonzero invariant factors of an integer matrix, in increasing divisibility order.

    Rectangular matrices are padded with zero rows or columns, which does not
    change the nonzero invariant factors.

    @param matrix: Integer matrix.
    @type  matrix: C{sympy.Matrix}

    @rtype: C{list} of C{int}
    """
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return []
    size = max(rows, cols)
    square = zeros(size, size)
    square[:rows, :cols] = matrix
    snf = smith_normal_form(square, domain=ZZ)
    return [abs(int(snf[i, i])) for i in range(size) if snf[i, i] != 0]


def spanning_tree_count(graph):
    """
    Number of spanning trees, as a cofactor of the Laplacian (Kirchhoff).

    @rtype: C{int}
    """
    reduced = reduced_laplacian(graph)
    if reduced.shape[0] == 0:
        return 1
    return int(reduced.det())


def _sublattice_index(matrix, rank, name):
    invariants = smith_invariants(matrix)
    if len(invariants) < rank:
        raise generic.DomainError("{} does not have full rank".format(name))
    index = 1
    for value in invariants:
        index *= value
    return index


def lattice_index(graph):
    """
    Index of Lambda_Z = Delta(C^0(G, Z)) in the degree-0 integer cochains.
    """
    return _sublattice_index(reduced_laplacian(graph), graph.num_vertices - 1, "The Laplacian")


def coboundary_image_index(graph):
    """
    Index of d*(C^1(G, Z)) in the degree-0 integer cochains. Equal to 1 on a
    connected graph, reported next to L{lattice_index}.
    """
    return _sublattice_index(incidence_matrix(graph)[1:, :], graph.num_vertices - 1, "The incidence matrix")


def jacobian_invariants(graph):
    """
    Invariant factors > 1 of the finite group H_{0,Z} / Lambda_Z.

    @rtype: C{list} of C{int}
    """
    return [value for value in smith_invariants(reduced_laplacian(graph)) if value > 1]


class CycleBasis:
    """
    Fundamental cycles of the deterministic spanning forest.

    Cycle i has coefficient 1 on its chord (the non-forest edge) and is
    completed by the forest path from the head of the chord back to its tail.

    @ivar graph: The graph.
    @type graph: L{vlimits.graph.Graph}

    @ivar tree: Indices of the forest edges.
    @type tree: C{list} of C{int}

    @ivar chords: Indices of the edges outside the forest, one per cycle.
    @type chords: C{list} of C{int}

    @ivar cycles: The basis elements.
    @type cycles: C{list} of L{Cochain1}
    """

    def __init__(self, graph):
        self.graph = graph
        self.tree = graph.spanning_tree()
        tree_set = set(self.tree)
        self.chords = [i for i in range(graph.num_edges) if i not in tree_set]

        forest = nx.Graph()
        forest.add_nodes_from(range(graph.num_vertices))
        for i in self.tree:
            forest.add_edge(graph.stored_tail(i), graph.stored_head(i), index=i)

        self.cycles = []
        for chord in self.chords:
            values = [0] * graph.num_edges
            values[chord] = 1
            path = nx.shortest_path(forest, graph.stored_head(chord), graph.stored_tail(chord))
            for a, b in zip(path, path[1:]):
                i = forest.edges[a, b]["index"]
                values[i] += 1 if graph.stored_tail(i) == a else -1
            self.cycles.append(Cochain1(graph, values))

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def chord_ids(self):
        return [self.graph.edges[i].id for i in self.chords]

    def combination(self, coeffs):
        """
        Integer combination of the basis cycles.

        @param coeffs: One coefficient per cycle.
        @type  coeffs: Sequence of C{int}

        @rtype: L{Cochain1}
        """
        result = Cochain1.zero(self.graph)
        for c, cycle in zip(coeffs, self.cycles):
            if c != 0:
                result = result + c * cycle
        return result

    def coordinates(self, h):
        """
        Coordinates of a 1-cochain in the basis.

        @return: The coordinates, or C{None} if h is not in H^1(G, Z).
        @rtype:  C{tuple} of C{int} or C{None}
        """
        if not h.is_integral() or not d_star(h).is_zero():
            return None
        coeffs = tuple(h.values[chord] for chord in self.chords)
        if self.combination(coeffs) != h:
            return None
        return coeffs

    def contains(self, h):
        return self.coordinates(h) is not None

    def matrix(self):
        return Matrix([list(c.values) for c in self.cycles])

    def is_saturated(self):
        """
        Whether the integer span of the basis is all of H^1(G, Z): the basis
        matrix has only unit invariant factors and full rank.
        """
        if len(self.cycles) == 0:
            return True
        invariants = smith_invariants(self.matrix())
        return len(invariants) == len(self.cycles) and all(v == 1 for v in invariants)


def cycle_basis(graph):
    """
    @rtype: L{CycleBasis}
    """
    return CycleBasis(graph)


def is_positive_definite(matrix):
    """
    Sylvester's criterion on an exact symmetric matrix.
    """
    for k in range(1, matrix.shape[0] + 1):
        if matrix[:k, :k].det() <= 0:
            return False
    return True


def to_fraction_matrix(matrix):
    """
    Convert an exact sympy matrix to nested lists of fractions.
    """
    return [[exact.to_fraction(str(matrix[i, j])) for j in range(matrix.shape[1])] for i in range(matrix.shape[0])]
