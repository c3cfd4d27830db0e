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
Readers for the JSON input files: graphs with their data, divisors and censuses.
"""
import json
import math
from fractions import Fraction

from vlimits import exact, generic
from vlimits.chipfire import Divisor, Subdivision
from vlimits.cochain import Cochain0, Cochain1
from vlimits.graph import Graph
from vlimits.lattice import cycle_basis
from vlimits.slopes import SlopeContext, integer_form
from vlimits.toric.characters import CharacterPair


def read_json(filename):
    """
    Read a JSON document.

    @return: The document and the position of its root.
    @rtype:  C{tuple} (C{object}, L{generic.FieldPosition})
    """
    try:
        with open(filename, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as ex:
        raise generic.ParseError("Cannot read file: {}".format(ex.strerror), generic.Position(filename))
    try:
        data = json.loads(text)
    except json.JSONDecodeError as ex:
        raise generic.ParseError("Invalid JSON: {}".format(ex.msg), generic.LinePosition(filename, ex.lineno))
    return data, generic.FieldPosition(filename, "")


def _expect(value, kind, pos):
    if not isinstance(value, kind) or isinstance(value, bool):
        raise generic.ParseError("Expected {}".format({dict: "an object", list: "a list", str: "a string"}[kind]), pos)
    return value


def _member(data, key, pos, required=True, default=None):
    if key not in data:
        if required:
            raise generic.ParseError('Missing field "{}"'.format(key), pos)
        return default
    return data[key]


class GraphInput:
    """
    Contents of a graph file.

    @ivar graph: The graph.
    @type graph: L{Graph}

    @ivar lengths: Edge lengths.
    @type lengths: C{list} of C{int}

    @ivar twist: Twisting m.
    @type twist: L{Cochain1}

    @ivar a: Character a per edge.
    @type a: C{list} of L{Fraction}

    @ivar b: Character b keyed by chord edge id, or C{None}.
    @type b: C{dict} or C{None}

    @ivar b_edges: Edge values of b, or C{None}.
    @type b_edges: C{list} or C{None}

    @ivar bdeg: Multidegree b.
    @type bdeg: L{Cochain0}

    @ivar pos: Position of the document root.
    @type pos: L{generic.FieldPosition}
    """

    def __init__(self, graph, lengths, twist, a, b, b_edges, bdeg, pos):
        self.graph = graph
        self.lengths = lengths
        self.twist = twist
        self.a = a
        self.b = b
        self.b_edges = b_edges
        self.bdeg = bdeg
        self.pos = pos

    def twist_denominator(self):
        """
        Least n for which n*twist is integral.

        @rtype: C{int}
        """
        return math.lcm(1, *(Fraction(value).denominator for value in self.twist.values))

    def slope_context(self, n=None):
        """
        Slope context of the file, by default at the least n the twist allows.

        @rtype: L{SlopeContext}
        """
        if n is None:
            n = self.twist_denominator()
        return SlopeContext(self.graph, self.lengths, self.twist, n)

    def integer_context(self):
        """
        The file rescaled to an integral twisting at n = 1, with the factor used.

        @rtype: C{tuple} (L{SlopeContext}, C{int})
        """
        return integer_form(self.slope_context())

    def characters(self):
        """
        The characters of the file; b on the cycle basis follows the chord ids.

        @rtype: L{CharacterPair}
        """
        if self.b_edges is not None:
            return CharacterPair(self.graph, self.a, b_edges=self.b_edges)
        b = None
        if self.b is not None:
            chords = cycle_basis(self.graph).chord_ids()
            pos = self.pos.child("b")
            for key in self.b:
                if key not in chords:
                    raise generic.ParseError(
                        'Edge "{}" is not a chord of the spanning tree (chords: {})'.format(key, ", ".join(chords)), pos
                    )
            b = [self.b.get(chord, 1) for chord in chords]
        return CharacterPair(self.graph, self.a, b)


def _nonzero_rational(value, pos):
    value = exact.to_fraction(value, pos)
    if value == 0:
        raise generic.ParseError("Character values must be nonzero", pos)
    return value


def _keyed_values(data, known, pos, convert):
    _expect(data, dict, pos)
    result = {}
    for key, value in data.items():
        if key not in known:
            raise generic.ParseError('Unknown id "{}"'.format(key), pos)
        result[key] = convert(value, pos.child(key))
    return result


def parse_graph(data, pos):
    """
    Build a L{GraphInput} from a decoded document.
    """
    _expect(data, dict, pos)
    vpos = pos.child("vertices")
    vertices = _expect(_member(data, "vertices", pos), list, vpos)
    if len(vertices) == 0:
        raise generic.ParseError("A graph needs at least one vertex", vpos)
    seen = set()
    for i, v in enumerate(vertices):
        _expect(v, str, vpos.child(i))
        if v in seen:
            raise generic.ParseError('Duplicate vertex id "{}"'.format(v), vpos.child(i))
        seen.add(v)

    epos = pos.child("edges")
    edges = []
    lengths = []
    twist = []
    a = []
    edge_ids = set()
    for i, edge in enumerate(_expect(_member(data, "edges", pos, False, []), list, epos)):
        field = epos.child(i)
        _expect(edge, dict, field)
        eid = _expect(_member(edge, "id", field), str, field.child("id"))
        if eid in edge_ids:
            raise generic.ParseError('Duplicate edge id "{}"'.format(eid), field.child("id"))
        edge_ids.add(eid)
        ends = []
        for key in ("tail", "head"):
            end = _expect(_member(edge, key, field), str, field.child(key))
            if end not in seen:
                raise generic.ParseError('Unknown vertex "{}"'.format(end), field.child(key))
            ends.append(end)
        if ends[0] == ends[1]:
            raise generic.ParseError('Edge "{}" is a loop; loops are not allowed'.format(eid), field)
        length = exact.to_integer(_member(edge, "length", field, False, 1), field.child("length"))
        generic.check_range(length, 1, None, "edge length", field.child("length"))
        edges.append((eid, ends[0], ends[1]))
        lengths.append(length)
        twist.append(exact.to_fraction(_member(edge, "twist", field, False, 0), field.child("twist")))
        a.append(_nonzero_rational(_member(edge, "a", field, False, 1), field.child("a")))

    try:
        graph = Graph(vertices, edges)
    except generic.DomainError as ex:
        raise generic.ParseError(ex.value, pos.child("edges"))

    b = None
    if "b" in data:
        b = _keyed_values(data["b"], edge_ids, pos.child("b"), _nonzero_rational)
    b_edges = None
    if "b_edges" in data:
        if b is not None:
            raise generic.ParseError('Give either "b" or "b_edges"', pos.child("b_edges"))
        values = _keyed_values(data["b_edges"], edge_ids, pos.child("b_edges"), _nonzero_rational)
        b_edges = [values.get(e.id, 1) for e in graph.edges]
    bdeg = Cochain0.zero(graph)
    if "bdeg" in data:
        bdeg = Cochain0.from_mapping(graph, _keyed_values(data["bdeg"], seen, pos.child("bdeg"), exact.to_integer))
    return GraphInput(graph, lengths, Cochain1(graph, twist), a, b, b_edges, bdeg, pos)


def load_graph(filename):
    """
    Read a graph file.

    @rtype: L{GraphInput}
    """
    data, pos = read_json(filename)
    return parse_graph(data, pos)


def load_divisor(filename, graph_input):
    """
    Read a divisor file: C{{"n": 1, "coeffs": {"u": -2, "z:e1:1": 1}}}.

    @param graph_input: The graph and lengths the divisor lives over.
    @type  graph_input: L{GraphInput}

    @rtype: L{Divisor}
    """
    data, pos = read_json(filename)
    _expect(data, dict, pos)
    n = exact.to_integer(_member(data, "n", pos, False, 1), pos.child("n"))
    generic.check_range(n, 1, None, "subdivision exponent n", pos.child("n"))
    sub = Subdivision(graph_input.graph, graph_input.lengths, n)
    cpos = pos.child("coeffs")
    coeffs = _keyed_values(_member(data, "coeffs", pos), sub.label_index, cpos, exact.to_integer)
    return Divisor.from_mapping(sub, coeffs, cpos)


def parse_census(data, pos):
    """
    Decode a census document back to exact values.

    @return: The records; cells and gluing values as fractions.
    @rtype:  C{list} of C{dict}
    """
    _expect(data, dict, pos)
    lpos = pos.child("limits")
    records = []
    for i, record in enumerate(_expect(_member(data, "limits", pos), list, lpos)):
        field = lpos.child(i)
        _expect(record, dict, field)
        gluing = {}
        for eid, pair in _expect(_member(record, "gluing", field), dict, field.child("gluing")).items():
            gpos = field.child("gluing").child(eid)
            _expect(pair, list, gpos)
            if len(pair) != 2:
                raise generic.ParseError("Expected a pair (x, y)", gpos)
            gluing[eid] = tuple(exact.to_fraction(v, gpos) for v in pair)
        records.append(
            {
                "cell": exact.parse_vector(_expect(_member(record, "cell", field), str, field.child("cell")), field),
                "dim": exact.to_integer(_member(record, "dim", field), field.child("dim")),
                "n": exact.to_integer(_member(record, "n", field), field.child("n")),
                "f": [exact.to_integer(v, field.child("f")) for v in _member(record, "f", field)],
                "degrees": [exact.to_integer(v, field.child("degrees")) for v in _member(record, "degrees", field)],
                "gluing": gluing,
                "h1_class": exact.to_integer(_member(record, "h1_class", field), field.child("h1_class")),
            }
        )
    return records


def load_census(filename):
    data, pos = read_json(filename)
    return parse_census(data, pos)


def census_records(census):
    """
    Records of a census in the form returned by L{parse_census}.
    """
    result = []
    for record in census.records():
        record = dict(record)
        record["cell"] = exact.parse_vector(record["cell"])
        record["gluing"] = {eid: tuple(exact.to_fraction(v) for v in pair) for eid, pair in record["gluing"].items()}
        result.append(record)
    return result
