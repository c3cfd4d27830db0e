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
Chip-firing on the subdivisions H^n of a graph: divisors, G-admissibility,
canonical extensions and the admissible firing moves.
"""
from vlimits import generic
from vlimits.cochain import Cochain0
from vlimits.graph import OrientedEdge


class Subdivision:
    """
    The graph H^n obtained by replacing every edge e by a chain of n*l_e unit segments.

    Vertices are enumerated as the vertices of the base graph, followed by
    the interior chain vertices z^e_1, ..., z^e_{k-1} (k = n*l_e) of each
    stored edge in storage order. Interior indices count from the tail of
    the stored orientation.

    @ivar base: The base graph G.
    @type base: L{vlimits.graph.Graph}

    @ivar lengths: Edge lengths l_e, in edge order.
    @type lengths: C{tuple} of C{int}

    @ivar n: Base change exponent.
    @type n: C{int}
    """

    def __init__(self, base, lengths, n=1):
        lengths = tuple(int(length) for length in lengths)
        if len(lengths) != base.num_edges:
            raise generic.DomainError("Expected {:d} edge lengths, got {:d}".format(base.num_edges, len(lengths)))
        for edge, length in zip(base.edges, lengths):
            generic.check_range(length, 1, None, 'length of edge "{}"'.format(edge.id))
        generic.check_range(n, 1, None, "subdivision exponent n")

        self.base = base
        self.lengths = lengths
        self.n = n

        self._offsets = []
        count = base.num_vertices
        for length in lengths:
            self._offsets.append(count)
            count += n * length - 1
        self.num_vertices = count

        labels = list(base.vertices)
        for edge, length in zip(base.edges, lengths):
            labels.extend("z:{}:{:d}".format(edge.id, i) for i in range(1, n * length))
        self.labels = tuple(labels)
        self.label_index = {label: i for i, label in enumerate(self.labels)}

    def __eq__(self, other):
        return (
            isinstance(other, Subdivision)
            and other.base is self.base
            and other.lengths == self.lengths
            and other.n == self.n
        )

    def __hash__(self):
        return hash((id(self.base), self.lengths, self.n))

    def chain_length(self, index):
        """
        Number of segments k = n*l_e of the chain of stored edge C{index}.
        """
        return self.n * self.lengths[index]

    def interior(self, index, i):
        """
        Vertex index of z^e_i for the stored orientation, 1 <= i <= k-1.
        """
        return self._offsets[index] + i - 1

    def chain(self, oe):
        """
        Vertex indices z^e_0, ..., z^e_k along an oriented edge; z^ē_i = z^e_{k-i}.

        @param oe: The oriented edge.
        @type  oe: L{OrientedEdge}

        @rtype: C{list} of C{int}
        """
        k = self.chain_length(oe.index)
        graph = self.base
        stored = (
            [graph.stored_tail(oe.index)]
            + [self.interior(oe.index, i) for i in range(1, k)]
            + [graph.stored_head(oe.index)]
        )
        if oe.reverse:
            stored.reverse()
        return stored

    def segments(self):
        """
        All unit segments as pairs of vertex indices.
        """
        for index in range(self.base.num_edges):
            chain = self.chain(OrientedEdge(index, False))
            for a, b in zip(chain, chain[1:]):
                yield a, b

    def scaled(self, n):
        return Subdivision(self.base, self.lengths, n)


class Divisor:
    """
    Integer coefficient per vertex of a subdivision.

    @ivar subdivision: The graph H^n.
    @type subdivision: L{Subdivision}

    @ivar coeffs: Coefficients, in the vertex enumeration of the subdivision.
    @type coeffs: C{tuple} of C{int}
    """

    __slots__ = ("subdivision", "coeffs")

    def __init__(self, subdivision, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != subdivision.num_vertices:
            raise generic.DomainError(
                "Divisor needs {:d} coefficients, got {:d}".format(subdivision.num_vertices, len(coeffs))
            )
        self.subdivision = subdivision
        self.coeffs = coeffs

    @classmethod
    def zero(cls, subdivision):
        return cls(subdivision, [0] * subdivision.num_vertices)

    @classmethod
    def from_mapping(cls, subdivision, mapping, pos=None):
        """
        Build from labels (vertex ids and C{"z:<edge-id>:<i>"}) to coefficients.
        """
        coeffs = [0] * subdivision.num_vertices
        for label, value in mapping.items():
            if label not in subdivision.label_index:
                raise generic.DomainError('Unknown vertex "{}" of the subdivision'.format(label), pos)
            coeffs[subdivision.label_index[label]] = value
        return cls(subdivision, coeffs)

    def _check_compatible(self, other):
        if self.subdivision != other.subdivision:
            raise generic.DomainError("Divisors live on different subdivisions")

    def __add__(self, other):
        self._check_compatible(other)
        return Divisor(self.subdivision, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check_compatible(other)
        return Divisor(self.subdivision, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.subdivision == other.subdivision and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Divisor({})".format(self.as_dict())

    def __getitem__(self, label):
        return self.coeffs[self.subdivision.label_index[label]]

    def degree(self):
        return sum(self.coeffs)

    def base_part(self):
        """
        Restriction to the vertices of the base graph.

        @rtype: L{Cochain0}
        """
        graph = self.subdivision.base
        return Cochain0(graph, self.coeffs[: graph.num_vertices])

    def interior_values(self, index):
        """
        Coefficients D(z^e_1), ..., D(z^e_{k-1}) of stored edge C{index}.
        """
        sub = self.subdivision
        return [self.coeffs[sub.interior(index, i)] for i in range(1, sub.chain_length(index))]

    def interior_support(self):
        """
        Charged interior vertices as a dict edge index -> list of chain indices.
        """
        support = {}
        for index in range(self.subdivision.base.num_edges):
            charged = [i + 1 for i, c in enumerate(self.interior_values(index)) if c != 0]
            if charged:
                support[index] = charged
        return support

    def as_dict(self):
        """
        Nonzero coefficients by label.
        """
        return {label: c for label, c in zip(self.subdivision.labels, self.coeffs) if c != 0}


class Extension:
    """
    Integer function on all vertices of a subdivision, typically extending a
    function on the base graph.
    """

    __slots__ = ("subdivision", "values")

    def __init__(self, subdivision, values):
        values = tuple(int(v) for v in values)
        if len(values) != subdivision.num_vertices:
            raise generic.DomainError(
                "Extension needs {:d} values, got {:d}".format(subdivision.num_vertices, len(values))
            )
        self.subdivision = subdivision
        self.values = values

    @classmethod
    def constant(cls, subdivision, value):
        return cls(subdivision, [value] * subdivision.num_vertices)

    def __add__(self, other):
        return Extension(self.subdivision, [a + b for a, b in zip(self.values, other.values)])

    def __eq__(self, other):
        return isinstance(other, Extension) and self.subdivision == other.subdivision and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "Extension({})".format(dict(zip(self.subdivision.labels, self.values)))

    def __getitem__(self, label):
        return self.values[self.subdivision.label_index[label]]

    def restriction(self):
        graph = self.subdivision.base
        return Cochain0(graph, self.values[: graph.num_vertices])


def principal_divisor(func):
    """
    div(f): the coefficient at w is the sum over the neighbours x of w of f(x) - f(w).

    @param func: Function on the vertices of the subdivision.
    @type  func: L{Extension}

    @rtype: L{Divisor}
    """
    coeffs = [0] * func.subdivision.num_vertices
    values = func.values
    for a, b in func.subdivision.segments():
        coeffs[a] += values[b] - values[a]
        coeffs[b] += values[a] - values[b]
    return Divisor(func.subdivision, coeffs)


def is_admissible(divisor):
    """
    At most one interior vertex per chain is charged, and with coefficient 1.
    """
    for index in range(divisor.subdivision.base.num_edges):
        interior = divisor.interior_values(index)
        if any(c not in (0, 1) for c in interior) or sum(interior) > 1:
            return False
    return True


def check_admissible(divisor):
    if not is_admissible(divisor):
        raise generic.DomainError("Divisor {} is not G-admissible".format(divisor.as_dict()))


def t_of(divisor, oe):
    """
    t^D_e = sum over j = 1..k of (k - j) D(z^e_j), with k = n*l_e.

    @param oe: The oriented edge.
    @type  oe: L{OrientedEdge}

    @rtype: C{int}
    """
    chain = divisor.subdivision.chain(oe)
    k = len(chain) - 1
    return sum((k - j) * divisor.coeffs[chain[j]] for j in range(1, k))


def single_vertex_extension(divisor, vertex):
    """
    f_{D,v}: 1 at v and at z^e_i for every oriented edge e with head v and
    i = k - t^D_e, ..., k; 0 elsewhere.

    @param divisor: An admissible divisor.
    @type  divisor: L{Divisor}

    @param vertex: Vertex id of the base graph.
    @type  vertex: C{str}

    @rtype: L{Extension}
    """
    sub = divisor.subdivision
    graph = sub.base
    v = graph.vertex_index[vertex]
    values = [0] * sub.num_vertices
    values[v] = 1
    for oe in graph.oriented_edges():
        if graph.head(oe) != v:
            continue
        chain = sub.chain(oe)
        k = len(chain) - 1
        for i in range(k - t_of(divisor, oe), k + 1):
            values[chain[i]] = 1
    return Extension(sub, values)


def fire(divisor, vertex):
    """
    The admissible chip-firing move M_v(D) = D + div(f_{D,v}).

    @rtype: L{Divisor}
    """
    check_admissible(divisor)
    return divisor + principal_divisor(single_vertex_extension(divisor, vertex))


def canonical_extension(f, divisor):
    """
    The unique extension of f to H^n keeping D + div(f~) admissible.

    f is first made nonnegative by subtracting its minimum (constants extend
    to constants), then built up by single-vertex firings, each against the
    divisor reached so far.

    @param f: Function on the base graph.
    @type  f: L{Cochain0}

    @param divisor: An admissible divisor.
    @type  divisor: L{Divisor}

    @rtype: L{Extension}
    """
    check_admissible(divisor)
    sub = divisor.subdivision
    graph = sub.base
    low = f.minimum()
    remaining = [v - low for v in f.values]
    result = Extension.constant(sub, low)
    current = divisor
    while any(r > 0 for r in remaining):
        for i, vertex in enumerate(graph.vertices):
            if remaining[i] == 0:
                continue
            step = single_vertex_extension(current, vertex)
            result = result + step
            current = current + principal_divisor(step)
            remaining[i] -= 1
    return result


def direct_extension(f, divisor):
    """
    Chain-by-chain closed form of the canonical extension, for any divisor.

    On a chain of k segments from A = f(tail) to B = f(head) with t = t^D_e,
    let t' = (B - A + t) mod k and s_1 = (B - A + t) div k. The new interior
    divisor is z_{k-t'} when t' > 0, and the segment slopes follow from
    s_{i+1} = s_i + D'(z_i) - D(z_i).

    @rtype: L{Extension}
    """
    sub = divisor.subdivision
    graph = sub.base
    values = [0] * sub.num_vertices
    for v in range(graph.num_vertices):
        values[v] = f.values[v]
    for index in range(graph.num_edges):
        oe = OrientedEdge(index, False)
        chain = sub.chain(oe)
        k = len(chain) - 1
        a = f.values[graph.stored_tail(index)]
        b = f.values[graph.stored_head(index)]
        q, t_new = divmod(b - a + t_of(divisor, oe), k)
        slope = q
        value = a
        for i in range(1, k):
            value += slope
            values[chain[i]] = value
            new_coeff = 1 if (t_new > 0 and i == k - t_new) else 0
            slope += new_coeff - divisor.coeffs[chain[i]]
    return Extension(sub, values)


def admissible_representative(divisor):
    """
    The admissible divisor D + div(g), g vanishing on the base vertices.
    """
    zero = Cochain0.zero(divisor.subdivision.base)
    return divisor + principal_divisor(direct_extension(zero, divisor))


def pullback(divisor, n):
    """
    Pullback from H^m to H^n, m | n: index i on a chain of H^m becomes i*n/m.

    @param divisor: Divisor on H^m.
    @type  divisor: L{Divisor}

    @param n: Target exponent, a multiple of m.
    @type  n: C{int}

    @rtype: L{Divisor}
    """
    sub = divisor.subdivision
    m = sub.n
    if n % m != 0:
        raise generic.DomainError(
            "Cannot pull back from H^{:d} to H^{:d}: {:d} does not divide {:d}".format(m, n, m, n)
        )
    target = sub.scaled(n)
    graph = sub.base
    coeffs = [0] * target.num_vertices
    coeffs[: graph.num_vertices] = divisor.coeffs[: graph.num_vertices]
    factor = n // m
    for index in range(graph.num_edges):
        for i in range(1, sub.chain_length(index)):
            coeffs[target.interior(index, i * factor)] = divisor.coeffs[sub.interior(index, i)]
    return Divisor(target, coeffs)
