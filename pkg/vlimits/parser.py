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


from fractions import Fraction

from ply import yacc

from vlimits import exact, generic, tokens


class Item:
    """
    One entry of a value list.

    @ivar name: Left side of C{name=value}, or C{None} for a positional entry.
    @type name: C{str} or C{None}

    @ivar value: A rational, or an identifier.
    @type value: C{int}, L{Fraction} or C{str}

    @ivar pos: Position of the entry.
    @type pos: L{generic.OptionPosition}
    """

    def __init__(self, name, value, pos):
        self.name = name
        self.value = value
        self.pos = pos

    def __repr__(self):
        return "Item({!r}, {!r})".format(self.name, self.value)


class ValueParser:
    """
    @ivar lexer: Scanner providing tokens.
    @type lexer: L{tokens.ValueLexer}

    @ivar tokens: Tokens of the scanner (used by PLY).
    @type tokens: C{List} of C{str}

    @ivar parser: PLY parser.
    @type parser: L{ply.yacc}
    """

    def __init__(self, debug=False):
        self.lexer = tokens.ValueLexer()
        self.lexer.build()
        self.tokens = self.lexer.tokens
        self.parser = yacc.yacc(module=self, debug=debug, optimize=not debug, write_tables=False)

    def parse(self, text, option):
        """
        Parse the value of an option.

        @return: The entries; an empty value gives an empty list.
        @rtype:  C{list} of L{Item}
        """
        if text.strip() == "":
            return []
        self.lexer.setup(text, option)
        return self.parser.parse(None, lexer=self.lexer.lexer, tracking=True)

    def p_error(self, t):
        if t is None:
            raise generic.ParseError("Syntax error, unexpected end of value", generic.OptionPosition(self.lexer.option))
        raise generic.ParseError('Syntax error, unexpected "{}"'.format(t.value), self.lexer.position(t.lexpos))

    def p_value_list(self, t):
        """value_list : item
        | value_list COMMA item"""
        if len(t) == 2:
            t[0] = [t[1]]
        else:
            t[0] = t[1] + [t[3]]

    def p_named_item(self, t):
        "item : ID EQ value"
        t[0] = Item(t[1], t[3], self.lexer.position(t.lexpos(1)))

    def p_item(self, t):
        "item : value"
        t[0] = Item(None, t[1], self.lexer.position(t.lexpos(1)))

    def p_value(self, t):
        """value : rational
        | ID
        | STRING"""
        t[0] = t[1]

    def p_rational(self, t):
        """rational : integer
        | integer SLASH NUMBER"""
        if len(t) == 2:
            t[0] = t[1]
        else:
            if t[3] == 0:
                raise generic.ParseError("Division by zero", self.lexer.position(t.lexpos(3)))
            t[0] = exact.normalize(Fraction(t[1], t[3]))

    def p_integer(self, t):
        """integer : NUMBER
        | MINUS NUMBER
        | PLUS NUMBER"""
        if len(t) == 2:
            t[0] = t[1]
        else:
            t[0] = -t[2] if t[1] == "-" else t[2]


_parser = None


def parse_values(text, option):
    """
    Parse a value list, building the parser on first use.

    @param text: Value of the option.
    @type  text: C{str}

    @param option: Option name, for error positions.
    @type  option: C{str}

    @rtype: C{list} of L{Item}
    """
    global _parser
    if _parser is None:
        _parser = ValueParser()
    return _parser.parse(text, option)


def _number(item):
    if isinstance(item.value, str):
        raise generic.ParseError('Expected a number, got "{}"'.format(item.value), item.pos)
    return item.value


def _is_named(items):
    for item in items[1:]:
        if (item.name is None) != (items[0].name is None):
            raise generic.ParseError("Mix of named and positional values", item.pos)
    return bool(items) and items[0].name is not None


def values_by_name(items, names, option, default=None, what="entry"):
    """
    Values of a list, either positional (one per name, in order) or as C{name=value}.

    @param items: Parsed list.
    @type  items: C{list} of L{Item}

    @param names: Names in order, e.g. the edge ids.
    @type  names: Sequence of C{str}

    @param option: Option name, for errors.
    @type  option: C{str}

    @param default: Value of names missing from a named list; C{None} makes them an error.

    @param what: Kind of the names, for errors.
    @type  what: C{str}

    @return: One number per name.
    @rtype:  C{list}
    """
    if _is_named(items):
        index = {name: i for i, name in enumerate(names)}
        values = [default] * len(names)
        seen = set()
        for item in items:
            if item.name not in index:
                raise generic.ParseError('Unknown {} "{}"'.format(what, item.name), item.pos)
            if item.name in seen:
                raise generic.ParseError('Duplicate {} "{}"'.format(what, item.name), item.pos)
            seen.add(item.name)
            values[index[item.name]] = _number(item)
        for name, value in zip(names, values):
            if value is None:
                raise generic.ParseError('Missing value for {} "{}"'.format(what, name), generic.OptionPosition(option))
        return values
    if len(items) != len(names):
        raise generic.ParseError(
            "Expected {:d} values, got {:d}".format(len(names), len(items)), generic.OptionPosition(option)
        )
    return [_number(item) for item in items]


def identifiers(items, known, what="vertex"):
    """
    Identifiers of a positional list, checked against the known ones.

    @rtype: C{list} of C{str}
    """
    result = []
    for item in items:
        if item.name is not None or not isinstance(item.value, str):
            raise generic.ParseError("Expected a {} id".format(what), item.pos)
        if item.value not in known:
            raise generic.ParseError('Unknown {} "{}"'.format(what, item.value), item.pos)
        result.append(item.value)
    return result
