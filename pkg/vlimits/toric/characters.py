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
Characters a and b, orbit points on the cells of R, cycle equations and the
action of the vertex torus.
"""
import itertools
from fractions import Fraction

from sympy import Matrix

from vlimits import exact, generic
from vlimits.cochain import Cochain0, extend
from vlimits.graph import OrientedEdge
from vlimits.lattice import cycle_basis
from vlimits.slopes import delta, dslope
from vlimits.toric.cells import CellIndex

# Cycle bases up to this size are checked on all combinations with coefficients in {-1, 0, 1}
max_combination_basis = 4


def _nonzero(value, name):
    value = Fraction(value)
    if value == 0:
        raise generic.DomainError("Character value {} must be nonzero".format(name))
    return value


class CharacterPair:
    """
    Characters a of C^1(G, Z) and b of H^1(G, Z).

    b is given on the fundamental cycles and extended to the edges by 1 on
    the spanning forest and the cycle value on each chord. Explicit edge
    values may be given instead; only their restriction to H^1 matters.

    @ivar graph: The graph.
    @type graph: L{vlimits.graph.Graph}

    @ivar a: a_e on the stored orientation; a on the reversed edge is the inverse.
    @type a: C{tuple} of L{Fraction}

    @ivar b: b on the fundamental cycles, in basis order.
    @type b: C{tuple} of L{Fraction}

    @ivar b_edges: Edge values of b.
    @type b_edges: C{tuple} of L{Fraction}
    """

    def __init__(self, graph, a=None, b=None, b_edges=None):
        self.graph = graph
        self.basis = cycle_basis(graph)
        if a is None:
            a = [1] * graph.num_edges
        if len(a) != graph.num_edges:
            raise generic.DomainError("Expected {:d} values of a, got {:d}".format(graph.num_edges, len(a)))
        self.a = tuple(_nonzero(v, 'a of edge "{}"'.format(e.id)) for v, e in zip(a, graph.edges))

        if b_edges is not None:
            if b is not None:
                raise generic.DomainError("Give b either on the cycle basis or on the edges, not both")
            if len(b_edges) != graph.num_edges:
                raise generic.DomainError(
                    "Expected {:d} edge values of b, got {:d}".format(graph.num_edges, len(b_edges))
                )
            self.b_edges = tuple(_nonzero(v, 'b of edge "{}"'.format(e.id)) for v, e in zip(b_edges, graph.edges))
            self.b = tuple(self._evaluate_edges(cycle) for cycle in self.basis)
        else:
            if b is None:
                b = [1] * len(self.basis)
            if len(b) != len(self.basis):
                raise generic.DomainError("Expected {:d} values of b, got {:d}".format(len(self.basis), len(b)))
            self.b = tuple(_nonzero(v, "b of cycle {:d}".format(i)) for i, v in enumerate(b))
            edges = [Fraction(1)] * graph.num_edges
            for chord, value in zip(self.basis.chords, self.b):
                edges[chord] = value
            self.b_edges = tuple(edges)

    def __repr__(self):
        return "CharacterPair(a={}, b={})".format(exact.format_vector(self.a), exact.format_vector(self.b))

    @classmethod
    def random(cls, graph, rng, bound=5):
        """
        Random nonzero rational characters with numerators and denominators up to C{bound}.
        """

        def pick():
            return Fraction(rng.choice([-1, 1]) * rng.randint(1, bound), rng.randint(1, bound))

        return cls(graph, [pick() for _e in graph.edges], [pick() for _c in cycle_basis(graph)])

    def a_value(self, oe):
        value = self.a[oe.index]
        return 1 / value if oe.reverse else value

    def _evaluate_edges(self, gamma):
        result = Fraction(1)
        for value, c in zip(self.b_edges, gamma.values):
            result *= value ** c
        return result

    def evaluate_b(self, gamma):
        """
        b(gamma) for an integral cycle gamma, as the product over its basis coordinates.

        @type gamma: L{vlimits.cochain.Cochain1}

        @rtype: L{Fraction}
        """
        coords = self.basis.coordinates(gamma)
        if coords is None:
            raise generic.DomainError("{} is not an element of H^1(G, Z)".format(gamma.key()))
        result = Fraction(1)
        for value, c in zip(self.b, coords):
            result *= value**c
        return result

    def gauge(self, z):
        """
        Change the edge values of b by b_e z_head / z_tail; the character on H^1 is unchanged.

        @param z: Nonzero value per vertex.
        @type  z: Sequence of rationals
        """
        graph = self.graph
        edges = [
            value * Fraction(z[graph.stored_head(i)]) / Fraction(z[graph.stored_tail(i)])
            for i, value in enumerate(self.b_edges)
        ]
        return CharacterPair(graph, self.a, b_edges=edges)


class OrbitPoint:
    """
    Point of the cell P_alpha, with a projective coordinate (x : y) on every
    edge where alpha is integral. Pairs are normalized to y = 1, or to (1 : 0).

    @ivar cell: The cell.
    @type cell: L{CellIndex}

    @ivar coords: Edge index -> (x, y).
    @type coords: C{dict}
    """

    def __init__(self, cell, coords):
        self.cell = cell
        self.coords = {}
        for index in sorted(coords):
            if not exact.is_integral(cell.values[index]):
                raise generic.DomainError(
                    'Edge "{}" has no coordinate on cell {}'.format(cell.graph.edges[index].id, cell.key())
                )
            x, y = (Fraction(v) for v in coords[index])
            if x == 0 and y == 0:
                raise generic.DomainError("(0 : 0) is not a projective point")
            self.coords[index] = (x / y, Fraction(1)) if y != 0 else (Fraction(1), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, OrbitPoint) and self.cell == other.cell and self.coords == other.coords

    def __hash__(self):
        return hash((self.cell, tuple(sorted(self.coords.items()))))

    def __repr__(self):
        return "OrbitPoint({}, {})".format(self.cell.key(), self.as_dict())

    def as_dict(self):
        edges = self.cell.graph.edges
        return {edges[i].id: (x, y) for i, (x, y) in self.coords.items()}


def cell_point(cell, characters):
    """
    The point with coordinate (b_e a_e^alpha_e : 1) on every integral edge of the cell.
    """
    coords = {}
    for index, value in enumerate(cell.values):
        if exact.is_integral(value):
            coords[index] = (characters.b_edges[index] * characters.a[index] ** exact.floor(value), 1)
    return OrbitPoint(cell, coords)


def orbit_point(ctx, characters, f):
    """
    The point p^n_f on the cell frak-d^{m,n}_f.

    @type ctx: L{vlimits.slopes.SlopeContext}
    @type characters: L{CharacterPair}
    @type f: L{Cochain0}

    @rtype: L{OrbitPoint}
    """
    return cell_point(CellIndex(dslope(ctx, f)), characters)


def _cycles_to_check(basis):
    cycles = list(basis)
    if 0 < len(cycles) <= max_combination_basis:
        for coeffs in itertools.product((-1, 0, 1), repeat=len(cycles)):
            if sum(1 for c in coeffs if c != 0) > 1:
                yield basis.combination(coeffs)
    yield from cycles


def cycle_equation_holds(point, characters, gamma):
    """
    One cycle equation, both sides cleared of denominators.

    For gamma with coefficients c_e on the integral edges the left side is
    prod_{c<0} (b_e a_e^alpha_e)^|c| * prod_{c>0} x_e^c * prod_{c<0} y_e^|c|
    and the right side the same with the signs of c swapped.
    """
    lhs = Fraction(1)
    rhs = Fraction(1)
    for index, c in enumerate(gamma.values):
        if c == 0:
            continue
        x, y = point.coords[index]
        weight = characters.b_edges[index] * characters.a[index] ** exact.floor(point.cell.values[index])
        if c > 0:
            lhs *= x**c
            rhs *= weight**c * y**c
        else:
            lhs *= weight ** (-c) * y ** (-c)
            rhs *= x ** (-c)
    return lhs == rhs


def check_cycle_equations(ctx, characters, f, point):
    """
    Whether the point satisfies the cycle equations of P^{a,b}_f: one per
    cycle of G_f, checked on a cycle basis of G_f and small combinations.

    @rtype: C{bool}
    """
    cell = CellIndex(dslope(ctx, f))
    if point.cell != cell:
        return False
    subgraph = ctx.graph.spanning_subgraph(cell.alpha.integral_edges())
    basis = cycle_basis(subgraph)
    for cycle in _cycles_to_check(basis):
        if not cycle_equation_holds(point, characters, extend(cycle, ctx.graph)):
            return False
    return True


def torus_act(z, point):
    """
    Action of the vertex torus: x_e -> z_head x_e and y_e -> z_tail y_e.

    @param z: Nonzero value per vertex.
    @type  z: Sequence of rationals

    @rtype: L{OrbitPoint}
    """
    graph = point.cell.graph
    if len(z) != graph.num_vertices:
        raise generic.DomainError("Expected {:d} torus coordinates, got {:d}".format(graph.num_vertices, len(z)))
    z = [_nonzero(v, "of the torus element") for v in z]
    coords = {
        index: (z[graph.stored_head(index)] * x, z[graph.stored_tail(index)] * y)
        for index, (x, y) in point.coords.items()
    }
    return OrbitPoint(point.cell, coords)


def stabilizer_dimension(point):
    """
    Dimension of the stabilizer of the point in the vertex torus: |V| minus
    the rank of the incidence rows of the edges with both coordinates nonzero.
    """
    graph = point.cell.graph
    rows = []
    for index, (x, y) in point.coords.items():
        if x != 0 and y != 0:
            row = [0] * graph.num_vertices
            row[graph.stored_head(index)] = 1
            row[graph.stored_tail(index)] = -1
            rows.append(row)
    rank = Matrix(rows).rank() if rows else 0
    return graph.num_vertices - rank


def orbit_dimension(point):
    return point.cell.graph.num_vertices - stabilizer_dimension(point)


def twister_gluing(ctx, characters, f):
    """
    Gluing a_e^delta_e(f) on the edges where n*l_e divides f(head) - f(tail).

    @param ctx: Untwisted slope context.
    @type  ctx: L{vlimits.slopes.SlopeContext}

    @return: Edge index -> gluing value.
    @rtype:  C{dict}
    """
    if not ctx.is_untwisted():
        raise generic.DomainError("Twisters are defined for the untwisted structure sheaf only")
    gluing = {}
    for index in range(ctx.graph.num_edges):
        oe = OrientedEdge(index, False)
        if ctx.numerator(f, oe) % ctx.denominator(oe) == 0:
            gluing[index] = characters.a[index] ** delta(ctx, f, oe)
    return gluing


class EnrichedStructure:
    """
    Degrees and gluing of the twister attached to f.

    @ivar degrees: deg J_v(f) = sum over the oriented e with head v of delta_ē(f).
    @type degrees: L{Cochain0}

    @ivar gluing: Edge index -> gluing value, on the divisible edges.
    @type gluing: C{dict}
    """

    def __init__(self, degrees, gluing):
        self.degrees = degrees
        self.gluing = gluing

    def non_divisible(self):
        return self.degrees.graph.num_edges - len(self.gluing)


def enriched_structure(ctx, characters, f):
    gluing = twister_gluing(ctx, characters, f)
    graph = ctx.graph
    degrees = [0] * graph.num_vertices
    for oe in graph.oriented_edges():
        opposite = OrientedEdge(oe.index, not oe.reverse)
        degrees[graph.head(oe)] += delta(ctx, f, opposite)
    return EnrichedStructure(Cochain0(graph, degrees), gluing)
