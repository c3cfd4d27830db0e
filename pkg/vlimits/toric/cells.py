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
Cells P_alpha of the chain arrangement R, indexed by half-integral 1-cochains.
"""
import itertools
from fractions import Fraction

from vlimits import exact, generic
from vlimits.cochain import Cochain0, Cochain1, d_star
from vlimits.graph import OrientedEdge
from vlimits.lattice import cycle_basis

HALF = Fraction(1, 2)


class CellIndex:
    """
    Index alpha of a cell; alpha_e in Z means a full chain component, alpha_e in Z + 1/2 a node.

    @ivar alpha: Half-integral cochain.
    @type alpha: L{Cochain1}
    """

    __slots__ = ("alpha",)

    def __init__(self, alpha):
        for edge, value in zip(alpha.graph.edges, alpha.values):
            if not exact.is_half_integral(value):
                raise generic.DomainError(
                    'Cell index is not half-integral on edge "{}": {}'.format(edge.id, exact.format_rational(value))
                )
        self.alpha = alpha

    @classmethod
    def from_values(cls, graph, values):
        return cls(Cochain1(graph, values))

    @property
    def graph(self):
        return self.alpha.graph

    @property
    def values(self):
        return self.alpha.values

    def __eq__(self, other):
        return isinstance(other, CellIndex) and self.alpha == other.alpha

    def __hash__(self):
        return hash(self.alpha)

    def __lt__(self, other):
        return self.values < other.values

    def __repr__(self):
        return "CellIndex{}".format(self.key())

    def key(self):
        return cell_key(self)

    def dimension(self):
        return cell_dimension(self)

    def radius(self):
        return max((abs(Fraction(v)) for v in self.values), default=Fraction(0))

    def contains(self, other):
        return cell_contains(self, other)


def cell_dimension(alpha):
    """
    Number of edges with alpha_e integral.
    """
    return sum(1 for v in alpha.values if exact.is_integral(v))


def cell_key(alpha):
    """
    Canonical string of a cell, like C{"(1,1/2)"}.
    """
    return exact.format_vector(alpha.values)


def cell_contains(alpha, beta):
    """
    Whether P_alpha contains P_beta: on every edge |beta_e - alpha_e| <= 1/2,
    and alpha_e = beta_e wherever beta_e is integral.

    @type alpha: L{CellIndex}
    @type beta: L{CellIndex}

    @rtype: C{bool}
    """
    if len(alpha.values) != len(beta.values):
        raise generic.DomainError("Cells live on different graphs")
    for a, b in zip(alpha.values, beta.values):
        if abs(Fraction(b) - a) > HALF:
            return False
        if exact.is_integral(b) and a != b:
            return False
    return True


def integer_cells_around(alpha):
    """
    All integral c with P_c containing P_alpha, in lexicographic order.

    @rtype: C{list} of L{CellIndex}
    """
    choices = []
    for v in alpha.values:
        if exact.is_integral(v):
            choices.append((v,))
        else:
            choices.append((v - HALF, v + HALF))
    return [CellIndex.from_values(alpha.graph, values) for values in itertools.product(*choices)]


def half_cell(c, oriented_edges):
    """
    c(t): the integral cell c moved by 1/2 along each listed oriented edge.

    @param c: Integral cell.
    @type  c: L{CellIndex}

    @param oriented_edges: At most one orientation per edge.
    @type  oriented_edges: Iterable of L{OrientedEdge}

    @rtype: L{CellIndex}
    """
    values = list(c.values)
    touched = set()
    for oe in oriented_edges:
        if oe.index in touched:
            raise generic.DomainError('Edge "{}" is listed twice'.format(c.graph.edges[oe.index].id))
        touched.add(oe.index)
        values[oe.index] += -HALF if oe.reverse else HALF
    return CellIndex.from_values(c.graph, values)


def orientation_between(c, alpha):
    """
    Inverse of L{half_cell}: the oriented edges t with alpha = c(t).
    """
    if not cell_contains(c, alpha):
        raise generic.DomainError("Cell {} does not contain {}".format(c.key(), alpha.key()))
    result = []
    for i, (a, b) in enumerate(zip(c.values, alpha.values)):
        if b != a:
            result.append(OrientedEdge(i, b < a))
    return result


def translate_cell(alpha, gamma):
    """
    alpha + gamma for an integral cycle gamma.

    @type gamma: L{Cochain1}

    @rtype: L{CellIndex}
    """
    if not gamma.is_integral() or not d_star(gamma).is_zero():
        raise generic.DomainError("{} is not an element of H^1(G, Z)".format(gamma.key()))
    return CellIndex(alpha.alpha + gamma)


def dedup_mod_H1(cells):
    """
    Partition cells into classes modulo translation by H^1(G, Z).

    Candidates are grouped by d*(alpha) and the fractional parts of alpha;
    membership of every difference is confirmed in the cycle basis.

    @param cells: Cells on one graph.
    @type  cells: Iterable of L{CellIndex}

    @return: The classes, each in input order, ordered by first member.
    @rtype:  C{list} of C{list} of L{CellIndex}
    """
    classes = []
    groups = {}
    basis = None
    for cell in cells:
        if basis is None:
            basis = cycle_basis(cell.graph)
        key = (d_star(cell.alpha).values, tuple(Fraction(v) % 1 for v in cell.values))
        for members in groups.get(key, []):
            if basis.contains(cell.alpha - members[0].alpha):
                members.append(cell)
                break
        else:
            members = [cell]
            groups.setdefault(key, []).append(members)
            classes.append(members)
    return classes


def cell_degrees(alpha, bdeg):
    """
    deg_v = b_v + sum over the oriented edges e with head v of floor(-alpha_e).

    @param bdeg: Multidegree b.
    @type  bdeg: L{Cochain0}

    @rtype: L{Cochain0}
    """
    graph = alpha.graph
    degrees = list(bdeg.values)
    for oe in graph.oriented_edges():
        degrees[graph.head(oe)] += exact.floor(-alpha.alpha.value(oe))
    return Cochain0(graph, degrees)


def half_integral_edges(alpha):
    return [i for i, v in enumerate(alpha.values) if not exact.is_integral(v)]
