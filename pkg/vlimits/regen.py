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
Regeneration of the stable limits from admissible divisors: the indices
i^n_e(f), the divisors D^n_f, the twist carried by a divisor and the
identities relating chip-firing to slopes.
"""
from fractions import Fraction

from vlimits import exact, generic
from vlimits.chipfire import Divisor, Subdivision, canonical_extension, principal_divisor, pullback, t_of
from vlimits.cochain import Cochain0, Cochain1
from vlimits.graph import OrientedEdge
from vlimits.slopes import SlopeContext, dslope, integer_form
from vlimits.toric.cells import CellIndex, cell_degrees
from vlimits.toric.census import LimitDescriptor, collect
from vlimits.toric.characters import cell_point


class RegenContext:
    """
    Input of a regeneration: slopes, multidegree and characters.

    @ivar slopes: Slope context.
    @type slopes: L{SlopeContext}

    @ivar bdeg: Multidegree b.
    @type bdeg: L{Cochain0}

    @ivar characters: Characters a, b.
    @type characters: L{vlimits.toric.characters.CharacterPair}
    """

    def __init__(self, slopes, bdeg, characters):
        self.slopes = slopes
        self.bdeg = bdeg
        self.characters = characters


def i_index(ctx, f, oe):
    """
    The i with 0 < i <= n*l_e and f(head) - f(tail) + n*m_e = n*l_e*delta_e + n*l_e - i.

    @type ctx: L{SlopeContext}
    @type f: L{Cochain0}
    @type oe: L{OrientedEdge}

    @rtype: C{int}
    """
    k = ctx.denominator(oe)
    _q, r = divmod(ctx.numerator(f, oe), k)
    return k - r


def subdivision_of(ctx):
    return Subdivision(ctx.graph, ctx.lengths, ctx.n)


def limit_divisor(ctx, f, bdeg=None):
    """
    The admissible divisor D^n_f: one chip at z^e_{i_e} on every edge where
    frak-d_f is not integral, and the degrees of the limit on the vertices.

    @param bdeg: Multidegree b, zero when omitted.
    @type  bdeg: L{Cochain0} or C{None}

    @rtype: L{Divisor}
    """
    graph = ctx.graph
    if bdeg is None:
        bdeg = Cochain0.zero(graph)
    sub = subdivision_of(ctx)
    cell = CellIndex(dslope(ctx, f))
    coeffs = [0] * sub.num_vertices
    coeffs[: graph.num_vertices] = cell_degrees(cell, bdeg).values
    for index in range(graph.num_edges):
        i = i_index(ctx, f, OrientedEdge(index, False))
        if i < sub.chain_length(index):
            coeffs[sub.interior(index, i)] = 1
    return Divisor(sub, coeffs)


def twist_of_divisor(divisor):
    """
    The twist p_e = t^D_e / n of a divisor on H^n, antisymmetric.

    @rtype: L{Cochain1}
    """
    sub = divisor.subdivision
    return Cochain1(
        sub.base, [Fraction(t_of(divisor, OrientedEdge(index, False)), sub.n) for index in range(sub.base.num_edges)]
    )


def divisor_context(divisor):
    """
    Slope context of the twist carried by a divisor.
    """
    sub = divisor.subdivision
    return SlopeContext(sub.base, sub.lengths, twist_of_divisor(divisor), sub.n)


def twister_restriction_degrees(divisor, g):
    """
    Degrees on V(G) of the twister by the canonical extension of g:
    sum over the oriented e with tail v of floor(frak-d_g(e)), plus the number
    of those e with negative twist, with the twist read off the divisor.

    @param divisor: Admissible divisor.
    @type  divisor: L{Divisor}

    @param g: Function on the vertices.
    @type  g: L{Cochain0}

    @rtype: L{Cochain0}
    """
    ctx = divisor_context(divisor)
    graph = ctx.graph
    slope = dslope(ctx, g)
    degrees = [0] * graph.num_vertices
    for oe in graph.oriented_edges():
        v = graph.tail(oe)
        degrees[v] += exact.floor(slope.value(oe))
        if ctx.twist.value(oe) < 0:
            degrees[v] += 1
    return Cochain0(graph, degrees)


def check_twister_restriction(divisor, g):
    """
    Compare L{twister_restriction_degrees} with div of the canonical extension on V(G).
    """
    expected = principal_divisor(canonical_extension(g, divisor)).base_part()
    return twister_restriction_degrees(divisor, g) == expected


def check_twist_indices(ctx, f, bdeg=None):
    """
    Check the twist of D^n_f against the indices i_e, and that
    n(p_e - m_e) = f(head) - f(tail) modulo n*l_e.
    """
    twist = twist_of_divisor(limit_divisor(ctx, f, bdeg))
    graph = ctx.graph
    for oe in graph.oriented_edges():
        p = twist.value(oe)
        k = ctx.denominator(oe)
        i = i_index(ctx, f, oe)
        if ctx.n * p != (k - i if p >= 0 else -i):
            return False
        diff = f.values[graph.head(oe)] - f.values[graph.tail(oe)]
        if (ctx.n * (p - ctx.twist.value(oe)) - diff) % k != 0:
            return False
    return True


def floor_identity_holds(ctx, f, h):
    """
    floor(frak-d_h(e)) = floor(frak-d^p_g(e)) + floor(frak-d_f(e)) + [p_e < 0]
    on every oriented edge, with g = h - f and p the twist of D^n_f.
    """
    twist = twist_of_divisor(limit_divisor(ctx, f))
    g_ctx = ctx.with_twist(twist)
    slope_f = dslope(ctx, f)
    slope_h = dslope(ctx, h)
    slope_g = dslope(g_ctx, h - f)
    for oe in ctx.graph.oriented_edges():
        rhs = exact.floor(slope_g.value(oe)) + exact.floor(slope_f.value(oe)) + (1 if twist.value(oe) < 0 else 0)
        if exact.floor(slope_h.value(oe)) != rhs:
            return False
    return True


def check_firing_regeneration(ctx, f, h, bdeg=None):
    """
    D^n_h = D^n_f + div(canonical extension of h - f with respect to D^n_f),
    together with the floor identity.

    @rtype: C{bool}
    """
    d_f = limit_divisor(ctx, f, bdeg)
    d_h = limit_divisor(ctx, h, bdeg)
    fired = d_f + principal_divisor(canonical_extension(h - f, d_f))
    return fired == d_h and floor_identity_holds(ctx, f, h)


def check_zero_pullback(ctx, n):
    """
    D^n_0 is the pullback of D^1_0, for an integral twisting.
    """
    if not ctx.twist.is_integral():
        raise generic.DomainError("Pullback of D^1_0 needs an integral twisting")
    zero = Cochain0.zero(ctx.graph)
    return limit_divisor(ctx.with_n(n), zero) == pullback(limit_divisor(ctx.with_n(1), zero), n)


def regenerate(rctx, window):
    """
    Rebuild the census of Y from the divisors D^n_0 alone.

    For every key (n, f) the divisor D^n_f is obtained by firing D^n_0 along
    the canonical extension of f. Its interior chips mark the edges where the
    limit is not invertible, the floors of the slopes come from the twist of
    D^n_0, and its vertex coefficients are the degrees.

    @type rctx: L{RegenContext}
    @type window: L{vlimits.slopes.TruncationWindow}

    @rtype: L{vlimits.toric.census.Census}
    """
    base, factor = integer_form(rctx.slopes)
    graph = base.graph
    zero = Cochain0.zero(graph)
    prepared = {}

    def prepare(n):
        if n not in prepared:
            ctx = base.with_n(n)
            start = limit_divisor(ctx, zero, rctx.bdeg)
            twist = twist_of_divisor(start)
            prepared[n] = (ctx, start, twist, ctx.with_twist(twist), dslope(ctx, zero))
        return prepared[n]

    def describe_key(n, f):
        ctx, start, twist, twisted, slope_0 = prepare(n)
        fired = start + principal_divisor(canonical_extension(f, start))
        slope_p = dslope(twisted, f)
        charged = fired.interior_support()
        values = []
        for index in range(graph.num_edges):
            oe = OrientedEdge(index, False)
            low = exact.floor(slope_p.value(oe)) + exact.floor(slope_0.value(oe)) + (1 if twist.value(oe) < 0 else 0)
            values.append(low + Fraction(1, 2) if index in charged else low)
        cell = CellIndex.from_values(graph, values)

        def build():
            return LimitDescriptor(n, f.canonical(), cell, fired.base_part(), cell_point(cell, rctx.characters))

        return cell, build

    return collect(graph, window, factor, describe_key)
