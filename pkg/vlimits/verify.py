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
Invariant suites run by C{vlimits verify}. Every suite returns a list of
failure messages; an empty list means it passed. All randomness comes from
one seeded generator, so runs are reproducible.
"""
import itertools
import random
from fractions import Fraction

from vlimits import exact, generic
from vlimits.chipfire import (
    Divisor,
    Subdivision,
    canonical_extension,
    direct_extension,
    fire,
    is_admissible,
    principal_divisor,
)
from vlimits.cochain import Cochain0, Cochain1, d, d_star
from vlimits.graph import Graph, OrientedEdge
from vlimits.lattice import cycle_basis, jacobian_invariants, lattice_index, spanning_tree_count
from vlimits.regen import (
    RegenContext,
    check_firing_regeneration,
    check_twist_indices,
    check_twister_restriction,
    check_zero_pullback,
    regenerate,
)
from vlimits.slopes import (
    TruncationWindow,
    delta,
    dslope,
    enumerate_keys,
    h1_separation_check,
    integer_form,
    integral_subgraph,
    rescale,
)
from vlimits.tilings import (
    INTERIOR,
    OUTSIDE,
    QuadraticForm,
    default_f_box,
    enumerate_tiles,
    lattice_generators,
    sample_points,
)
from vlimits.toric import (
    CharacterPair,
    cell_contains,
    check_cycle_equations,
    default_window,
    orbit_dimension,
    torus_act,
    y_census,
)
from vlimits.toric.characters import cell_point


def random_graph(rng, max_vertices=4, max_extra=3):
    """
    Random connected multigraph: a random tree plus up to C{max_extra} more edges.

    @param rng: Random generator.
    @type  rng: C{random.Random}

    @rtype: L{Graph}
    """
    count = rng.randint(1, max_vertices)
    vertices = ["v{:d}".format(i) for i in range(count)]
    ends = []
    for i in range(1, count):
        j = rng.randrange(i)
        ends.append((vertices[j], vertices[i]) if rng.random() < 0.5 else (vertices[i], vertices[j]))
    if count > 1:
        for _i in range(rng.randint(0, max_extra)):
            tail, head = rng.sample(vertices, 2)
            ends.append((tail, head))
    return Graph(vertices, [("e{:d}".format(i), tail, head) for i, (tail, head) in enumerate(ends)])


def random_function(graph, rng, box):
    return Cochain0(graph, [rng.randint(-box, box) for _v in graph.vertices])


def random_admissible_divisor(subdivision, rng, spread=2):
    """
    Random vertex coefficients in [-spread, spread] and at most one chip per chain.

    @rtype: L{Divisor}
    """
    coeffs = [0] * subdivision.num_vertices
    for v in range(subdivision.base.num_vertices):
        coeffs[v] = rng.randint(-spread, spread)
    for index in range(subdivision.base.num_edges):
        k = subdivision.chain_length(index)
        i = rng.randint(0, k - 1)
        if i > 0:
            coeffs[subdivision.interior(index, i)] = 1
    return Divisor(subdivision, coeffs)


def chain_extensions(f, divisor, index):
    """
    Exhaustive search of the interior values on one chain that make the
    divisor admissible on it.

    @return: All solutions, as tuples of interior values.
    @rtype:  C{list} of C{tuple}
    """
    sub = divisor.subdivision
    chain = sub.chain(OrientedEdge(index, False))
    k = len(chain) - 1
    a = f.values[sub.base.stored_tail(index)]
    b = f.values[sub.base.stored_head(index)]
    old = [divisor.coeffs[v] for v in chain]
    solutions = []
    span = range(min(a, b) - k - 1, max(a, b) + k + 2)
    for interior in itertools.product(span, repeat=k - 1):
        values = (a,) + interior + (b,)
        new = [old[i] + values[i - 1] + values[i + 1] - 2 * values[i] for i in range(1, k)]
        if all(c in (0, 1) for c in new) and sum(new) <= 1:
            solutions.append(interior)
    return solutions


def _slope_contexts(data, n_max):
    """
    The integer form of the input and its contexts for n = 1..n_max.
    """
    base, _factor = data.integer_context()
    return [base.with_n(n) for n in range(1, n_max + 1)]


def check_graph(data, rng, count):
    failures = []
    graphs = [data.graph] + [random_graph(rng, 6, 4) for _i in range(count)]
    for graph in graphs:
        index = lattice_index(graph)
        trees = spanning_tree_count(graph)
        if index != trees:
            failures.append("{}: lattice index {:d} != spanning trees {:d}".format(graph, index, trees))
        product = 1
        for value in jacobian_invariants(graph):
            product *= value
        if product != index:
            failures.append("{}: invariant factors multiply to {:d}, not {:d}".format(graph, product, index))
        basis = cycle_basis(graph)
        if len(basis) != graph.genus() or not basis.is_saturated():
            failures.append("{}: cycle basis is not a basis of H^1".format(graph))
        for cycle in basis:
            if not d_star(cycle).is_zero():
                failures.append("{}: cycle {} is not closed".format(graph, cycle.key()))
    graph = data.graph
    for _i in range(count):
        f = random_function(graph, rng, 5)
        h = Cochain1(graph, [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _e in graph.edges])
        if d(f).pairing(h) != f.pairing(d_star(h)):
            failures.append("<df, h> != <f, d*h> for f = {}, h = {}".format(f.key(), h.key()))
    return failures


def check_chipfire(data, rng, count):
    failures = []
    graph = data.graph
    for _i in range(count):
        n = rng.randint(1, 2)
        sub = Subdivision(graph, data.lengths, n)
        divisor = random_admissible_divisor(sub, rng)
        f = random_function(graph, rng, 3)
        canonical = canonical_extension(f, divisor)
        if canonical != direct_extension(f, divisor):
            failures.append("canonical and direct extension differ for f = {}".format(f.key()))
            continue
        if canonical.restriction() != f:
            failures.append("canonical extension does not extend f = {}".format(f.key()))
        if not is_admissible(divisor + principal_divisor(canonical)):
            failures.append("canonical extension of f = {} is not admissible".format(f.key()))
        for index in range(graph.num_edges):
            if sub.chain_length(index) > 4:
                continue
            solutions = chain_extensions(f, divisor, index)
            expected = tuple(canonical.values[sub.interior(index, i)] for i in range(1, sub.chain_length(index)))
            if solutions != [expected]:
                failures.append(
                    'edge "{}": exhaustive search finds {:d} extensions'.format(graph.edges[index].id, len(solutions))
                )

        u, v = rng.choice(graph.vertices), rng.choice(graph.vertices)
        if fire(fire(divisor, u), v) != fire(fire(divisor, v), u):
            failures.append("firing {} and {} does not commute".format(u, v))
        fired = divisor
        for vertex in graph.vertices:
            fired = fire(fired, vertex)
        if fired != divisor:
            failures.append("firing every vertex once changes the divisor")
    return failures


def check_slopes(data, rng, count):
    failures = []
    contexts = _slope_contexts(data, 3)
    graph = data.graph
    for _i in range(count):
        ctx = rng.choice(contexts)
        f = random_function(graph, rng, 6)
        slope = dslope(ctx, f)
        for index in range(graph.num_edges):
            total = delta(ctx, f, OrientedEdge(index, False)) + delta(ctx, f, OrientedEdge(index, True))
            if total not in (0, -1) or (total == 0) != exact.is_integral(slope.values[index]):
                failures.append("delta_e + delta_ē = {:d} for f = {}".format(total, f.key()))
        if dslope(ctx, f + Cochain0.constant(graph, rng.randint(-5, 5))) != slope:
            failures.append("slopes are not translation invariant at f = {}".format(f.key()))
        if dslope(ctx.with_n(2 * ctx.n), 2 * f) != slope:
            failures.append("slopes change under (n, f) -> (2n, 2f) at f = {}".format(f.key()))
        if ctx.n % 2 == 0 and dslope(rescale(ctx, 2), f) != slope:
            failures.append("slopes change under rescaling at f = {}".format(f.key()))
    counterexample = h1_separation_check(contexts[0], TruncationWindow(3, 3, 1))
    if counterexample is not None:
        failures.append("slopes of {} and {} differ by a cycle".format(*counterexample))
    return failures


def check_tilings(data, rng, count):
    failures = []
    graph = data.graph
    if graph.num_vertices == 1:
        return failures
    form = QuadraticForm(graph)
    generators = lattice_generators(graph)
    for _i in range(count):
        eta = Cochain0.zero(graph)
        for gen in generators:
            eta = eta + Fraction(rng.randint(-9, 9), rng.randint(1, 5)) * gen
        if not eta.is_zero() and form.q(eta) <= 0:
            failures.append("q({}) is not positive".format(eta.key()))

    ctx = _slope_contexts(data, 1)[0]
    reach = Cochain0.zero(graph)
    for gen in generators:
        reach = reach + gen
    f_box = default_f_box(ctx, reach)
    tiles, _skipped = enumerate_tiles(ctx, f_box)
    for eta in sample_points(graph, count, rng):
        positions = [tile.position(eta) for tile in tiles]
        inside = [p for p in positions if p != OUTSIDE]
        if not inside:
            failures.append("{} lies in no tile".format(eta.key()))
        elif len(inside) == 1 and inside[0] != INTERIOR:
            failures.append("{} lies on the boundary of a single tile".format(eta.key()))
        if sum(1 for p in positions if p == INTERIOR) > 1:
            failures.append("{} is interior to two tiles".format(eta.key()))

    centers = {}
    for f in enumerate_keys(graph, TruncationWindow(1, f_box, 1)):
        slope = dslope(ctx, f)
        if not integral_subgraph(ctx, f, slope).is_connected():
            continue
        center = d_star(slope)
        if centers.setdefault(center, slope) != slope:
            failures.append(
                "cells {} and {} share the center {}".format(centers[center].key(), slope.key(), center.key())
            )
    return failures


def check_toric(data, rng, count):
    failures = []
    graph = data.graph
    ctx = data.slope_context()
    characters = data.characters()
    census = y_census(ctx, characters, data.bdeg, default_window(ctx, 2, 1))
    base, _factor = integer_form(ctx)
    contexts = {}
    for desc in census.limits:
        if desc.total_degree() != data.bdeg.degree():
            failures.append(
                "cell {}: total degree {} != {}".format(desc.cell.key(), desc.total_degree(), data.bdeg.degree())
            )
        sub = contexts.setdefault(desc.n, base.with_n(desc.n))
        if integral_subgraph(sub, desc.f).is_connected() and orbit_dimension(desc.point) != graph.num_vertices - 1:
            failures.append("cell {}: orbit dimension {:d}".format(desc.cell.key(), orbit_dimension(desc.point)))
    for _i in range(count if census.limits else 0):
        random_characters = CharacterPair.random(graph, rng)
        desc = rng.choice(census.limits)
        sub = contexts[desc.n]
        point = cell_point(desc.cell, random_characters)
        if not check_cycle_equations(sub, random_characters, desc.f, point):
            failures.append("cell {}: cycle equations fail for {}".format(desc.cell.key(), random_characters))
        z = [Fraction(rng.randint(1, 5), rng.randint(1, 5)) for _v in graph.vertices]
        if cell_point(desc.cell, random_characters.gauge(z)) != torus_act(z, point):
            failures.append("cell {}: gauge change is not a torus translate".format(desc.cell.key()))
    if len(set(census.classes)) != len(census):
        failures.append("two census cells differ by a cycle")
    cells = census.cells()
    for alpha, beta in itertools.combinations(cells, 2):
        if cell_contains(alpha, beta) and cell_contains(beta, alpha):
            failures.append("cells {} and {} contain each other".format(alpha.key(), beta.key()))
    if census.connected is False:
        failures.append("interior of the census is not connected")
    return failures


def check_regen(data, rng, count):
    failures = []
    graph = data.graph
    contexts = _slope_contexts(data, 3)
    for _i in range(count):
        ctx = rng.choice(contexts)
        f = random_function(graph, rng, 5)
        h = random_function(graph, rng, 5)
        if not check_firing_regeneration(ctx, f, h, data.bdeg):
            failures.append("n = {:d}: D_h != D_f + div(g) for f = {}, h = {}".format(ctx.n, f.key(), h.key()))
        if not check_twist_indices(ctx, f, data.bdeg):
            failures.append("n = {:d}: twist of D_f does not match the indices for f = {}".format(ctx.n, f.key()))
        divisor = random_admissible_divisor(Subdivision(graph, ctx.lengths, ctx.n), rng)
        g = random_function(graph, rng, 4)
        if not check_twister_restriction(divisor, g):
            failures.append("n = {:d}: twister degrees differ from div for g = {}".format(ctx.n, g.key()))
    if contexts[0].twist.is_integral():
        for n in range(1, 5):
            if not check_zero_pullback(contexts[0], n):
                failures.append("D^{:d}_0 is not the pullback of D^1_0".format(n))
    ctx = data.slope_context()
    characters = data.characters()
    window = default_window(ctx, 2, 1)
    census = y_census(ctx, characters, data.bdeg, window)
    regenerated = regenerate(RegenContext(ctx, data.bdeg, characters), window)
    if census.to_document() != regenerated.to_document():
        failures.append("regenerated census differs from the census of Y")
    return failures


def check_consistency(data, rng, count):
    """
    Census cells at n = 1 with a connected integral subgraph against the
    centers of the mixed tiles, over one box of functions.
    """
    failures = []
    graph = data.graph
    if graph.num_vertices == 1:
        return failures
    ctx, _factor = data.integer_context()
    reach = Cochain0.zero(graph)
    for gen in lattice_generators(graph):
        reach = reach + gen
    f_box = default_f_box(ctx, reach)
    shift = max((abs(exact.floor(Fraction(v))) + 1 for v in ctx.twist.values), default=0)
    window = TruncationWindow(1, f_box, 2 * f_box + shift)
    census = y_census(ctx, data.characters(), data.bdeg, window)
    tiles, _skipped = enumerate_tiles(ctx, f_box)
    centers = {tile.center for tile in tiles}

    by_class = {}
    for desc, klass in zip(census.limits, census.classes):
        if integral_subgraph(ctx, desc.f).is_connected():
            by_class.setdefault(klass, set()).add(d_star(desc.cell.alpha))
    found = {}
    for klass, members in by_class.items():
        if len(members) != 1:
            failures.append("H^1 class {:d} has {:d} tile centers".format(klass, len(members)))
        for center in members:
            if center in found and found[center] != klass:
                failures.append(
                    "H^1 classes {:d} and {:d} share the center {}".format(found[center], klass, center.key())
                )
            found[center] = klass
    for center in centers - set(found):
        failures.append("tile center {} has no census cell".format(center.key()))
    for center in set(found) - centers:
        failures.append("census center {} is not a tile center".format(center.key()))
    return failures


SUITES = {
    "graph": check_graph,
    "chipfire": check_chipfire,
    "slopes": check_slopes,
    "tilings": check_tilings,
    "consistency": check_consistency,
    "toric": check_toric,
    "regen": check_regen,
}


def run_suites(data, names, seed, count):
    """
    Run the named suites, each with its own generator seeded from C{seed}.

    @param data: Parsed input file.
    @type  data: L{vlimits.loader.GraphInput}

    @param names: Suite names, in L{SUITES}.
    @type  names: C{list} of C{str}

    @return: Failures per suite.
    @rtype:  C{dict}
    """
    results = {}
    for name in names:
        if name not in SUITES:
            raise generic.DomainError(
                'Unknown suite "{}", expected one of {}'.format(name, ", ".join(SUITES)),
                generic.OptionPosition("--suite"),
            )
        generic.print_progress("Running suite {} ...".format(name))
        results[name] = SUITES[name](data, random.Random("{}:{:d}".format(name, seed)), count)
        generic.clear_progress()
        status = "pass" if not results[name] else "FAIL ({:d})".format(len(results[name]))
        generic.print_info("suite {}: {}".format(name, status))
    return results
