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
Slope functions delta and frak-d of a function on the vertices, and the
subgraph of edges with integral slope.
"""
import itertools
import math
from fractions import Fraction

from vlimits import exact, generic
from vlimits.cochain import Cochain0, Cochain1, d_star
from vlimits.graph import OrientedEdge
from vlimits.lattice import cycle_basis


class SlopeContext:
    """
    Edge lengths l, twisting m and base change exponent n.

    @ivar graph: The graph.
    @type graph: L{vlimits.graph.Graph}

    @ivar lengths: Edge lengths, positive.
    @type lengths: C{tuple} of C{int}

    @ivar twist: Twisting 1-cochain with rational values, n*twist integral.
    @type twist: L{Cochain1}

    @ivar n: Base change exponent.
    @type n: C{int}
    """

    def __init__(self, graph, lengths, twist=None, n=1):
        self.graph = graph
        self.lengths = tuple(int(length) for length in lengths)
        if len(self.lengths) != graph.num_edges:
            raise generic.DomainError(
                "Expected {:d} edge lengths, got {:d}".format(graph.num_edges, len(self.lengths))
            )
        for edge, length in zip(graph.edges, self.lengths):
            generic.check_range(length, 1, None, 'length of edge "{}"'.format(edge.id))
        generic.check_range(n, 1, None, "base change exponent n")
        self.twist = Cochain1.zero(graph) if twist is None else twist
        self.n = n
        for edge, value in zip(graph.edges, self.twist.values):
            if not exact.is_integral(n * Fraction(value)):
                raise generic.DomainError(
                    'n*m is not integral on edge "{}": n = {:d}, m = {}'.format(
                        edge.id, n, exact.format_rational(value)
                    )
                )
        self._scaled_twist = tuple(exact.floor(n * Fraction(v)) for v in self.twist.values)

    def __repr__(self):
        return "SlopeContext(l={}, m={}, n={:d})".format(self.lengths, self.twist.key(), self.n)

    def with_n(self, n):
        return SlopeContext(self.graph, self.lengths, self.twist, n)

    def with_twist(self, twist):
        return SlopeContext(self.graph, self.lengths, twist, self.n)

    def is_untwisted(self):
        return self.twist.is_zero()

    def numerator(self, f, oe):
        """
        f(head) - f(tail) + n*m_e, an integer.
        """
        scaled = self._scaled_twist[oe.index]
        if oe.reverse:
            scaled = -scaled
        return f.values[self.graph.head(oe)] - f.values[self.graph.tail(oe)] + scaled

    def denominator(self, oe):
        return self.n * self.lengths[oe.index]


def delta(ctx, f, oe):
    """
    delta_e(f) = floor((f(head) - f(tail) + n*m_e) / (n*l_e)).

    @param ctx: Slope context.
    @type  ctx: L{SlopeContext}

    @param f: Integer function on the vertices.
    @type  f: L{Cochain0}

    @param oe: Oriented edge.
    @type  oe: L{OrientedEdge}

    @rtype: C{int}
    """
    return ctx.numerator(f, oe) // ctx.denominator(oe)


def dslope(ctx, f):
    """
    frak-d(e) = (delta_e - delta_ē) / 2, a half-integral 1-cochain.

    @rtype: L{Cochain1}
    """
    values = []
    for index in range(ctx.graph.num_edges):
        forward = delta(ctx, f, OrientedEdge(index, False))
        backward = delta(ctx, f, OrientedEdge(index, True))
        values.append(Fraction(forward - backward, 2))
    return Cochain1(ctx.graph, values)


def integral_subgraph(ctx, f, slope=None):
    """
    The spanning subgraph G^m_f of the edges where frak-d is integral.

    @param slope: Precomputed L{dslope}, if available.
    @type  slope: L{Cochain1} or C{None}

    @rtype: L{vlimits.graph.Graph}
    """
    if slope is None:
        slope = dslope(ctx, f)
    return ctx.graph.spanning_subgraph(slope.integral_edges())


def rescale(ctx, m):
    """
    The context (m*l, m*twist, n/m), which has the same slopes.

    @param m: Divisor of n.
    @type  m: C{int}

    @rtype: L{SlopeContext}
    """
    generic.check_range(m, 1, None, "rescaling factor")
    if ctx.n % m != 0:
        raise generic.DomainError("Cannot rescale by {:d}: it does not divide n = {:d}".format(m, ctx.n))
    return SlopeContext(ctx.graph, [m * length for length in ctx.lengths], m * ctx.twist, ctx.n // m)


def integer_form(ctx):
    """
    Rescale so the twisting becomes integral (n = 1 in the result when the
    denominators of the twist are exactly n).

    @return: Rescaled context and the factor used.
    @rtype:  C{tuple} (L{SlopeContext}, C{int})
    """
    m = 1
    for value in ctx.twist.values:
        m = math.lcm(m, Fraction(value).denominator)
    if m == 1:
        return ctx, 1
    full = SlopeContext(ctx.graph, ctx.lengths, ctx.twist, m)
    return rescale(full, m), m


def canonical_key(f):
    return f.canonical()


class TruncationWindow:
    """
    Finite window for enumerations.

    @ivar n_max: Largest base change exponent.
    @type n_max: C{int}

    @ivar f_box: Bound on |f(v)| for the canonical f (f(v_0) = 0).
    @type f_box: C{int}

    @ivar radius: Bound on |alpha_e| for the cells kept.
    @type radius: C{int}
    """

    def __init__(self, n_max, f_box, radius):
        generic.check_range(n_max, 1, None, "n_max")
        generic.check_range(f_box, 1, None, "f-box radius")
        generic.check_range(radius, 1, None, "cell window radius")
        self.n_max = n_max
        self.f_box = f_box
        self.radius = radius

    def __repr__(self):
        return "TruncationWindow(n_max={:d}, f_box={:d}, radius={:d})".format(self.n_max, self.f_box, self.radius)

    @classmethod
    def covering(cls, ctx, n_max, radius):
        """
        Window whose f-box is large enough that every cell with |alpha_e| <= radius
        for some n <= n_max is reached by a canonical f inside it.
        """
        longest = max(ctx.lengths) if ctx.lengths else 1
        shift = max((abs(exact.floor(Fraction(v))) + 1 for v in ctx.twist.values), default=0)
        steps = max(1, ctx.graph.num_vertices - 1)
        return cls(n_max, steps * n_max * (longest * (radius + 1) + shift), radius)


def enumerate_keys(graph, window):
    """
    Canonical functions f (f(v_0) = 0) with |f(v)| <= window.f_box, in lexicographic order.

    @type window: L{TruncationWindow}
    """
    span = range(-window.f_box, window.f_box + 1)
    for rest in itertools.product(span, repeat=graph.num_vertices - 1):
        yield Cochain0(graph, (0,) + rest)


def on_box_boundary(f, f_box):
    return any(abs(v) == f_box for v in f.values[1:])


def h1_separation_check(ctx, window):
    """
    Check that two slope cochains over the window never differ by a nonzero
    element of H^1(G, Z).

    Slopes are grouped by d*(frak-d) and by their fractional parts; two cells in
    one group differ by an integral element of ker d*, and every such pair is
    then confirmed through the cycle basis coordinates.

    @param ctx: Slope context; its n is ignored, n runs over 1..window.n_max.
    @type  ctx: L{SlopeContext}

    @param window: Enumeration window (only n_max and f_box are used).
    @type  window: L{TruncationWindow}

    @return: C{None} on success, else a counterexample ((n1, f1), (n2, f2)).
    @rtype:  C{None} or C{tuple}
    """
    basis = cycle_basis(ctx.graph)
    groups = {}
    for n in range(1, window.n_max + 1):
        try:
            sub = ctx.with_n(n)
        except generic.DomainError:
            continue
        for f in enumerate_keys(ctx.graph, window):
            slope = dslope(sub, f)
            key = (d_star(slope).values, tuple(Fraction(v) % 1 for v in slope.values))
            cells = groups.setdefault(key, {})
            cells.setdefault(slope.values, (n, f))

    for cells in groups.values():
        if len(cells) < 2:
            continue
        items = sorted(cells.items())
        first_values, first_key = items[0]
        for values, key in items[1:]:
            diff = Cochain1(ctx.graph, [a - b for a, b in zip(values, first_values)])
            if basis.contains(diff) and not diff.is_zero():
                return first_key, key
    return None
