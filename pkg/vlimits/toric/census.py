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
Census of the stable limits in a finite window: one descriptor per cell of
Y, the degeneration order between them and its Hasse diagram.
"""
import networkx as nx

from vlimits import exact, generic
from vlimits.slopes import TruncationWindow, dslope, enumerate_keys, integer_form, on_box_boundary
from vlimits.toric.cells import CellIndex, cell_contains, cell_degrees, dedup_mod_H1, half_integral_edges
from vlimits.toric.characters import cell_point

stats = {"keys": 0, "duplicates": 0, "outside": 0}


def print_stats():
    """
    Print statistics about the last census.
    """
    if stats["keys"] > 0:
        generic.print_info(
            "Census keys: {:d} ({:d} duplicates, {:d} outside the cell window)".format(
                stats["keys"], stats["duplicates"], stats["outside"]
            )
        )


class LimitDescriptor:
    """
    A stable limit, named by its first key (n, f).

    @ivar n: Base change exponent.
    @type n: C{int}

    @ivar f: Canonical function on the vertices.
    @type f: L{vlimits.cochain.Cochain0}

    @ivar cell: The cell frak-d^{m,n}_f.
    @type cell: L{CellIndex}

    @ivar degrees: Degree of the limit on each component.
    @type degrees: L{vlimits.cochain.Cochain0}

    @ivar point: Gluing data at the nodes.
    @type point: L{vlimits.toric.characters.OrbitPoint}
    """

    def __init__(self, n, f, cell, degrees, point):
        self.n = n
        self.f = f
        self.cell = cell
        self.degrees = degrees
        self.point = point

    def __repr__(self):
        return "LimitDescriptor(n={:d}, f={}, cell={})".format(self.n, self.f.key(), self.cell.key())

    def payload(self):
        return self.cell, self.degrees, self.point

    def dimension(self):
        return self.cell.dimension()

    def total_degree(self):
        """
        sum_v deg_v plus the number of edges where the limit is not invertible.
        """
        return self.degrees.degree() + len(half_integral_edges(self.cell))

    def record(self, h1_class):
        edges = self.cell.graph.edges
        return {
            "cell": self.cell.key(),
            "dim": self.dimension(),
            "n": self.n,
            "f": list(self.f.values),
            "degrees": list(self.degrees.values),
            "gluing": {
                edges[i].id: [exact.json_value(x), exact.json_value(y)] for i, (x, y) in self.point.coords.items()
            },
            "h1_class": h1_class,
        }


def describe(ctx, characters, bdeg, f, cell=None):
    """
    Descriptor of the limit I^n(f).

    @param ctx: Slope context, with the n of the key.
    @type  ctx: L{vlimits.slopes.SlopeContext}

    @param characters: Characters a, b.
    @type  characters: L{vlimits.toric.characters.CharacterPair}

    @param bdeg: Multidegree b.
    @type  bdeg: L{vlimits.cochain.Cochain0}

    @param f: Function on the vertices; it is canonicalized.
    @type  f: L{vlimits.cochain.Cochain0}

    @rtype: L{LimitDescriptor}
    """
    if cell is None:
        cell = CellIndex(dslope(ctx, f))
    return LimitDescriptor(ctx.n, f.canonical(), cell, cell_degrees(cell, bdeg), cell_point(cell, characters))


def degenerates(first, second):
    """
    Whether the limit C{first} is a degeneration of C{second}.

    @type first: L{LimitDescriptor}
    @type second: L{LimitDescriptor}
    """
    return cell_contains(second.cell, first.cell)


class Census:
    """
    Descriptors of a window, merged by cell.

    @ivar window: The enumeration window.
    @type window: L{TruncationWindow}

    @ivar factor: Rescaling factor applied to make the twisting integral.
    @type factor: C{int}

    @ivar complete: Whether no key on the boundary of the f-box reached the cell window.
    @type complete: C{bool}

    @ivar limits: Descriptors ordered by cell, after L{finish}.
    @type limits: C{list} of L{LimitDescriptor}

    @ivar hasse: Cover relations (bigger cell, smaller cell) as indices into L{limits}.
    @type hasse: C{list} of C{tuple}

    @ivar classes: H^1 class of each descriptor.
    @type classes: C{list} of C{int}

    @ivar connected: Whether the containment graph of the interior cells is
        connected, or C{None} if the window is incomplete.
    @type connected: C{bool} or C{None}
    """

    def __init__(self, graph, window, factor=1):
        self.graph = graph
        self.window = window
        self.factor = factor
        self.complete = True
        self._by_cell = {}
        self.limits = []
        self.hasse = []
        self.classes = []
        self.connected = None

    def __len__(self):
        return len(self.limits)

    def add(self, descriptor):
        """
        Add a descriptor; an existing one with the same cell is kept.

        @return: Whether the cell was new.
        @rtype:  C{bool}
        """
        known = self._by_cell.get(descriptor.cell)
        if known is not None:
            assert known.payload() == descriptor.payload(), "descriptors of {} disagree".format(descriptor.cell.key())
            stats["duplicates"] += 1
            return False
        self._by_cell[descriptor.cell] = descriptor
        return True

    def finish(self):
        self.limits = sorted(self._by_cell.values(), key=lambda desc: desc.cell)
        cells = [desc.cell for desc in self.limits]

        containment = nx.DiGraph()
        containment.add_nodes_from(range(len(cells)))
        for i, alpha in enumerate(cells):
            for j, beta in enumerate(cells):
                if i != j and cell_contains(alpha, beta):
                    containment.add_edge(i, j)
        self.hasse = sorted(nx.transitive_reduction(containment).edges())

        klass = {}
        for number, members in enumerate(dedup_mod_H1(cells)):
            for cell in members:
                klass[cell] = number
        self.classes = [klass[cell] for cell in cells]

        if not self.complete:
            self.connected = None
        else:
            interior = [i for i, cell in enumerate(cells) if cell.radius() < self.window.radius]
            inner = containment.subgraph(interior)
            self.connected = len(interior) == 0 or nx.is_weakly_connected(inner)

    def descriptor(self, cell):
        return self._by_cell.get(cell)

    def cells(self):
        return [desc.cell for desc in self.limits]

    def hasse_graph(self):
        """
        The Hasse diagram with cell keys as nodes.

        @rtype: C{networkx.DiGraph}
        """
        result = nx.DiGraph()
        for desc in self.limits:
            result.add_node(desc.cell.key(), dim=desc.dimension())
        for i, j in self.hasse:
            result.add_edge(self.limits[i].cell.key(), self.limits[j].cell.key())
        return result

    def is_path(self):
        """
        Whether the Hasse diagram, taken undirected, is a single path.
        """
        undirected = self.hasse_graph().to_undirected()
        if len(undirected) == 0 or not nx.is_connected(undirected):
            return False
        return len(undirected) == 1 or (
            undirected.number_of_edges() == len(undirected) - 1 and max(d for _v, d in undirected.degree()) <= 2
        )

    def records(self):
        return [desc.record(klass) for desc, klass in zip(self.limits, self.classes)]

    def to_document(self):
        """
        JSON-ready form of the census.
        """
        return {
            "graph": {"vertices": list(self.graph.vertices), "edges": [e.id for e in self.graph.edges]},
            "window": {"n_max": self.window.n_max, "f_box": self.window.f_box, "radius": self.window.radius},
            "rescaled": self.factor,
            "complete": self.complete,
            "connected": self.connected,
            "limits": self.records(),
            "hasse": [[self.limits[i].cell.key(), self.limits[j].cell.key()] for i, j in self.hasse],
        }


def default_window(ctx, n_max, radius):
    """
    Window whose f-box covers the cell window, for the integer form of ctx.
    """
    base, _factor = integer_form(ctx)
    return TruncationWindow.covering(base, n_max, radius)


def collect(graph, window, factor, describe_key):
    """
    Run C{describe_key(n, f)} over the window and merge the results.

    @param describe_key: Returns the cell for (n, f) and a callable building the descriptor.
    @type  describe_key: C{callable}

    @rtype: L{Census}
    """
    census = Census(graph, window, factor)
    for n in range(1, window.n_max + 1):
        for f in enumerate_keys(graph, window):
            stats["keys"] += 1
            cell, build = describe_key(n, f)
            if cell.radius() > window.radius:
                stats["outside"] += 1
                continue
            if on_box_boundary(f, window.f_box):
                census.complete = False
            census.add(build())
    census.finish()
    if not census.complete:
        generic.print_warning(
            generic.Warning.WINDOW,
            "f-box {:d} is too small for cell window {:d}; connectivity is not reported".format(
                window.f_box, window.radius
            ),
        )
    return census


def y_census(ctx, characters, bdeg, window):
    """
    Census of Y^{a,b}_{l,m} over the window: every (n, f) with n <= n_max and
    canonical f in the f-box, kept when its cell lies in the cell window.

    A rational twisting is first made integral by rescaling the lengths.

    @param ctx: Slope context; its n is ignored.
    @type  ctx: L{vlimits.slopes.SlopeContext}

    @param characters: Characters a, b.
    @type  characters: L{vlimits.toric.characters.CharacterPair}

    @param bdeg: Multidegree b.
    @type  bdeg: L{vlimits.cochain.Cochain0}

    @param window: Enumeration window.
    @type  window: L{TruncationWindow}

    @rtype: L{Census}
    """
    base, factor = integer_form(ctx)
    contexts = {}

    def describe_key(n, f):
        if n not in contexts:
            contexts[n] = base.with_n(n)
        sub = contexts[n]
        cell = CellIndex(dslope(sub, f))
        return cell, lambda: describe(sub, characters, bdeg, f, cell)

    return collect(ctx.graph, window, factor, describe_key)
