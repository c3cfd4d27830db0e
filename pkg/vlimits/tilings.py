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
The quadratic form q on degree-0 cochains, Voronoi cells of the lattices
Im(Laplacian) and the twisted mixed Voronoi tilings. Everything is exact;
polytopes are never built, only membership is decided.
"""
import itertools
import math
from fractions import Fraction

from sympy import Matrix, Rational

from vlimits import exact, generic
from vlimits.cochain import Cochain0, d, d_star
from vlimits.lattice import reduced_laplacian, to_fraction_matrix
from vlimits.slopes import TruncationWindow, dslope, enumerate_keys, integral_subgraph

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"

# Largest candidate radius tried before giving up on stabilization
max_candidate_radius = 32

stats = {"positions": 0, "candidates": 0, "skipped": 0}

_candidate_cache = {}


def print_stats():
    """
    Print statistics about the Voronoi membership tests.
    """
    if stats["positions"] > 0:
        generic.print_info(
            "Voronoi positions: {:d} ({:d} lattice candidates)".format(stats["positions"], stats["candidates"])
        )
    if stats["skipped"] > 0:
        generic.print_info("Skipped functions with disconnected G_f: {:d}".format(stats["skipped"]))


def _check_degree_zero(eta):
    if eta.degree() != 0:
        degree = exact.format_rational(eta.degree())
        raise generic.DomainError("Expected a cochain of degree 0, got degree {}".format(degree))


class QuadraticForm:
    """
    The form q(eta) = <g, eta>, where g is any solution of Laplacian(g) = eta.

    @ivar graph: A connected graph.
    @type graph: L{vlimits.graph.Graph}

    @ivar inverse: Inverse of the reduced Laplacian, as fractions.
    @type inverse: C{list} of C{list} of L{Fraction}
    """

    def __init__(self, graph):
        if not graph.is_connected():
            raise generic.DomainError("The quadratic form needs a connected graph")
        self.graph = graph
        reduced = reduced_laplacian(graph)
        self.inverse = to_fraction_matrix(reduced.inv()) if reduced.shape[0] > 0 else []

    def potential(self, eta):
        """
        The g with Laplacian(g) = eta and g(v_0) = 0.

        @param eta: Degree-0 cochain.
        @type  eta: L{Cochain0}

        @rtype: L{Cochain0}
        """
        _check_degree_zero(eta)
        rest = [Fraction(v) for v in eta.values[1:]]
        values = [0]
        for row in self.inverse:
            values.append(sum((a * b for a, b in zip(row, rest)), Fraction(0)))
        return Cochain0(self.graph, values)

    def bilinear(self, x, y):
        return self.potential(x).pairing(y)

    def q(self, eta):
        return self.bilinear(eta, eta)

    def gram_matrix(self):
        """
        Gram matrix of q in the basis chi_{v_i} - chi_{v_0}, i >= 1.
        """
        graph = self.graph
        basis = []
        for i in range(1, graph.num_vertices):
            values = [0] * graph.num_vertices
            values[0] = -1
            values[i] = 1
            basis.append(Cochain0(graph, values))
        return [[self.bilinear(x, y) for y in basis] for x in basis]


def _candidates(graph, radius):
    """
    Nonzero integer potentials g with g(v_0) = 0 and |g(v)| <= radius, with
    the norm <g, Laplacian(g)>. Cached per edge set.
    """
    key = (graph.vertices, graph.edges, radius)
    if key not in _candidate_cache:
        span = range(-radius, radius + 1)
        result = []
        for rest in itertools.product(span, repeat=graph.num_vertices - 1):
            if not any(rest):
                continue
            g = Cochain0(graph, (0,) + rest)
            norm = sum(v * v for v in d(g).values)
            result.append((g.values, norm))
        _candidate_cache[key] = result
    return _candidate_cache[key]


def _position_at(graph, x, radius):
    slack_min = None
    for values, norm in _candidates(graph, radius):
        stats["candidates"] += 1
        slack = norm - 2 * sum(Fraction(a) * b for a, b in zip(values, x.values))
        if slack < 0:
            return OUTSIDE
        if slack_min is None or slack < slack_min:
            slack_min = slack
    if slack_min is None or slack_min > 0:
        return INTERIOR
    return BOUNDARY


def voronoi_position(x, graph):
    """
    Position of x relative to the Voronoi cell of the origin in Im(Laplacian of graph).

    The cell of O is cut out by q(lambda) - 2 b(x, lambda) >= 0 over the lattice
    points lambda = Laplacian(g), which reads <g, Laplacian(g)> - 2 <g, x> >= 0.
    Candidates g range over a box whose radius doubles until two consecutive
    radii agree. A violated inequality is final at once.

    @param x: Degree-0 cochain on the vertices of C{graph}.
    @type  x: L{Cochain0}

    @param graph: Connected graph (usually a spanning subgraph).
    @type  graph: L{vlimits.graph.Graph}

    @return: One of L{INTERIOR}, L{BOUNDARY}, L{OUTSIDE}.
    @rtype:  C{str}
    """
    _check_degree_zero(x)
    if not graph.is_connected():
        raise generic.DomainError("Voronoi cells need a connected graph")
    return _voronoi_position(x, graph)


def _voronoi_position(x, graph):
    stats["positions"] += 1
    if graph.num_vertices == 1:
        return INTERIOR
    radius = 1
    previous = _position_at(graph, x, radius)
    while previous != OUTSIDE:
        if radius >= max_candidate_radius:
            raise generic.DomainError(
                "Voronoi candidate search did not stabilize up to radius {:d}".format(max_candidate_radius)
            )
        radius *= 2
        current = _position_at(graph, x, radius)
        if current == previous:
            return current
        previous = current
    return OUTSIDE


def lattice_coordinates(beta, graph):
    """
    The integer g with Laplacian(g) = beta and g(v_0) = 0, or C{None} if beta is not in the lattice.
    """
    g = QuadraticForm(graph).potential(beta)
    return g if g.is_integral() else None


def vor_member(eta, beta, graph):
    """
    Whether eta lies in Vor(beta), the closed Voronoi cell of the lattice point beta.

    @param eta: Degree-0 cochain.
    @type  eta: L{Cochain0}

    @param beta: Point of the lattice Im(Laplacian of graph).
    @type  beta: L{Cochain0}

    @rtype: C{bool}
    """
    if lattice_coordinates(beta, graph) is None:
        raise generic.DomainError("{} is not a point of the lattice".format(beta))
    return voronoi_position(eta - beta, graph) != OUTSIDE


class Tile:
    """
    A tile center + Vor_H(O).

    @ivar kind: C{"standard"} or C{"mixed"}.
    @type kind: C{str}

    @ivar center: Center, a degree-0 cochain.
    @type center: L{Cochain0}

    @ivar f: For mixed tiles, the (canonical) function defining the tile.
    @type f: L{Cochain0} or C{None}

    @ivar subgraph: Connected spanning subgraph H whose Voronoi cell is used.
    @type subgraph: L{vlimits.graph.Graph}
    """

    def __init__(self, kind, center, subgraph, f=None):
        self.kind = kind
        self.center = center
        self.subgraph = subgraph
        self.f = f

    def __repr__(self):
        f = None if self.f is None else self.f.key()
        return "Tile({}, center={}, f={})".format(self.kind, self.center.key(), f)

    def position(self, eta):
        x = Cochain0(self.subgraph, (eta - self.center).values)
        return _voronoi_position(x, self.subgraph)


def standard_tile(graph, f):
    """
    Tile of the standard tiling around the lattice point Laplacian(f).
    """
    center = d_star(d(f))
    return Tile("standard", center, graph, f)


def mixed_tile(ctx, f):
    """
    Tile d*(frak-d_f) + Vor_{G_f}(O), or C{None} if G_f is disconnected.

    @type ctx: L{vlimits.slopes.SlopeContext}
    """
    slope = dslope(ctx, f)
    subgraph = integral_subgraph(ctx, f, slope)
    if not subgraph.is_connected():
        return None
    return Tile("mixed", d_star(slope), subgraph, f)


def default_f_box(ctx, eta=None):
    """
    Box for the search of tiles around eta: f / l roughly follows the potential of eta.
    """
    reach = 0
    if eta is not None and ctx.graph.num_vertices > 1:
        g = QuadraticForm(ctx.graph).potential(eta)
        reach = max(abs(v) for v in g.values)
    shift = max((abs(Fraction(v)) for v in ctx.twist.values), default=0)
    return max(1, max(ctx.lengths, default=1) * (exact.floor(reach) + 2) + exact.floor(shift) + 1)


def enumerate_tiles(ctx, f_box):
    """
    Mixed tiles of the canonical f in the box, with distinct centers.

    @return: The tiles and the number of functions skipped for a disconnected G_f.
    @rtype:  C{tuple} (C{list} of L{Tile}, C{int})
    """
    if ctx.n != 1:
        raise generic.DomainError("Mixed tilings are defined for n = 1, got n = {:d}".format(ctx.n))
    window = TruncationWindow(1, f_box, 1)
    tiles = []
    seen = set()
    skipped = 0
    for f in enumerate_keys(ctx.graph, window):
        tile = mixed_tile(ctx, f)
        if tile is None:
            skipped += 1
            continue
        if tile.center in seen:
            continue
        seen.add(tile.center)
        tiles.append(tile)
    stats["skipped"] += skipped
    return tiles, skipped


class TileMatch:
    """
    Result of L{mixed_tile_of}.

    @ivar tiles: The tiles containing the point, in enumeration order.
    @type tiles: C{list} of L{Tile}

    @ivar boundary: Whether the point lies on a tile boundary.
    @type boundary: C{bool}

    @ivar skipped: Functions in the search box with a disconnected G_f.
    @type skipped: C{int}
    """

    def __init__(self, tiles, boundary, skipped):
        self.tiles = tiles
        self.boundary = boundary
        self.skipped = skipped

    @property
    def f(self):
        return self.tiles[0].f


def locate(tiles, eta):
    """
    Tiles containing eta, and whether eta is on a boundary.
    """
    found = []
    boundary = False
    for tile in tiles:
        position = tile.position(eta)
        if position == OUTSIDE:
            continue
        found.append(tile)
        if position == BOUNDARY:
            boundary = True
    return found, boundary or len(found) > 1


def mixed_tile_of(ctx, eta, f_box=None, tiles=None):
    """
    Find the mixed tiles containing eta.

    @param ctx: Slope context with n = 1.
    @type  ctx: L{vlimits.slopes.SlopeContext}

    @param eta: Degree-0 rational cochain.
    @type  eta: L{Cochain0}

    @param f_box: Search box for the canonical f; derived from eta when omitted.
    @type  f_box: C{int} or C{None}

    @param tiles: Precomputed tiles, as returned by L{enumerate_tiles}.

    @rtype: L{TileMatch}
    """
    _check_degree_zero(eta)
    skipped = 0
    if tiles is None:
        tiles, skipped = enumerate_tiles(ctx, f_box if f_box is not None else default_f_box(ctx, eta))
    found, boundary = locate(tiles, eta)
    if not found:
        raise generic.DomainError(
            "Search window exhausted for {} ({:d} functions with disconnected G_f skipped)".format(eta.key(), skipped)
        )
    return TileMatch(found, boundary, skipped)


def lattice_generators(graph):
    """
    Laplacian(chi_{v_i}) for i >= 1, a basis of Im(Laplacian).
    """
    return [d_star(d(Cochain0.indicator(graph, v))) for v in graph.vertices[1:]]


def sample_points(graph, count, rng, denominator=97):
    """
    Random rational degree-0 points in the fundamental box of the generators.

    @param rng: Random generator.
    @type  rng: C{random.Random}

    @rtype: C{list} of L{Cochain0}
    """
    generators = lattice_generators(graph)
    points = []
    for _i in range(count):
        point = Cochain0.zero(graph)
        for gen in generators:
            point = point + Fraction(rng.randrange(denominator), denominator) * gen
        points.append(point)
    return points


class TilingPicture:
    """
    Data for drawing a mixed tiling in the plane (or on a line).

    Points are mapped to coordinates in which q is the Euclidean norm.

    @ivar dim: Dimension of H_0, 1 or 2.
    @type dim: C{int}

    @ivar tiles: Tiles met by the samples.
    @type tiles: C{list} of L{Tile}

    @ivar samples: Pairs (plane coordinates, tile number or C{None} on a boundary).
    @type samples: C{list} of C{tuple}

    @ivar translates: Plane coordinates of lattice points around the fundamental box.
    @type translates: C{list} of C{tuple} of C{float}

    @ivar step: Sample spacing along each generator, in lattice units.
    @type step: L{Fraction}
    """

    def __init__(self, graph, dim, embedding):
        self.graph = graph
        self.dim = dim
        self.embedding = embedding
        self.tiles = []
        self.samples = []
        self.translates = []
        self.step = Fraction(1)
        self.sample_size = 0.0

    def to_plane(self, eta):
        coords = [float(v) for v in eta.values[1:]]
        return tuple(sum(self.embedding[i][j] * coords[j] for j in range(self.dim)) for i in range(self.dim))

    def bounds(self):
        points = [p for p, _t in self.samples] + self.translates + [self.to_plane(t.center) for t in self.tiles]
        lows = tuple(min(p[i] for p in points) for i in range(self.dim))
        highs = tuple(max(p[i] for p in points) for i in range(self.dim))
        return lows, highs

    def transform(self, width, height, margin=20):
        """
        Map plane coordinates to pixels, y growing downwards. Lines are drawn across the middle.

        @return: The mapping and the scale (pixels per unit).
        @rtype:  C{tuple} (C{callable}, C{float})
        """
        lows, highs = self.bounds()
        spans = [max(high - low, 1e-9) for low, high in zip(lows, highs)]
        if self.dim == 1:
            scale = (width - 2 * margin) / spans[0]
            return (lambda p: (margin + (p[0] - lows[0]) * scale, height / 2)), scale
        scale = min((width - 2 * margin) / spans[0], (height - 2 * margin) / spans[1])
        return (lambda p: (margin + (p[0] - lows[0]) * scale, height - margin - (p[1] - lows[1]) * scale)), scale

    def sidecar(self):
        """
        Exact tile centers for the JSON sidecar.
        """
        return {
            "dim": self.dim,
            "tiles": [
                {"f": list(t.f.values), "center": exact.format_vector(t.center.values), "edges": len(t.subgraph.edges)}
                for t in self.tiles
            ],
        }


def _embedding(form):
    """
    Upper triangular R with R^T R = Gram, so |R c| is the q-norm of coordinates c.
    """
    gram = Matrix([[Rational(v.numerator, v.denominator) for v in map(Fraction, row)] for row in form.gram_matrix()])
    lower = gram.cholesky(hermitian=False)
    upper = lower.T
    return [[float(upper[i, j]) for j in range(upper.shape[1])] for i in range(upper.shape[0])]


def tiling_picture(ctx, resolution=24, f_box=None):
    """
    Sample the fundamental box of Im(Laplacian) on a grid and record which mixed tile each point is in.

    @param ctx: Slope context with n = 1.
    @type  ctx: L{vlimits.slopes.SlopeContext}

    @param resolution: Grid points per generator.
    @type  resolution: C{int}

    @rtype: L{TilingPicture}
    """
    graph = ctx.graph
    dim = graph.num_vertices - 1
    if dim < 1 or dim > 2:
        raise generic.DomainError("Cannot draw a tiling of dimension {:d}, only 1 and 2 are supported".format(dim))
    generic.check_range(resolution, 1, None, "sample resolution")
    form = QuadraticForm(graph)
    picture = TilingPicture(graph, dim, _embedding(form))
    generators = lattice_generators(graph)
    reach = Cochain0.zero(graph)
    for gen in generators:
        reach = reach + gen
    tiles, skipped = enumerate_tiles(ctx, f_box if f_box is not None else default_f_box(ctx, reach))

    used = {}
    picture.step = Fraction(1, resolution)
    picture.sample_size = float(picture.step) * min(math.hypot(*picture.to_plane(gen)) for gen in generators)
    for steps in itertools.product(range(resolution), repeat=dim):
        eta = Cochain0.zero(graph)
        for s, gen in zip(steps, generators):
            eta = eta + Fraction(2 * s + 1, 2 * resolution) * gen
        found, boundary = locate(tiles, eta)
        if not found:
            raise generic.DomainError(
                "Search window exhausted for {} ({:d} functions with disconnected G_f skipped)".format(
                    eta.key(), skipped
                )
            )
        if boundary:
            picture.samples.append((picture.to_plane(eta), None))
            continue
        tile = found[0]
        if id(tile) not in used:
            used[id(tile)] = len(picture.tiles)
            picture.tiles.append(tile)
        picture.samples.append((picture.to_plane(eta), used[id(tile)]))

    for coeffs in itertools.product(range(-1, 3), repeat=dim):
        point = Cochain0.zero(graph)
        for c, gen in zip(coeffs, generators):
            point = point + c * gen
        picture.translates.append(picture.to_plane(point))
    return picture
