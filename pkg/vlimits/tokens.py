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


from ply import lex

from vlimits import generic


class ValueLexer:
    """
    Scanner for the value lists given on the command line, like C{e1=2, e2=-3/4}.

    @ivar lexer: PLY scanner object.
    @type lexer: L{ply.lex}

    @ivar option: Name of the option being scanned, for error positions.
    @type option: C{str}

    @ivar text: Input text to scan.
    @type text: C{str}
    """

    tokens = [
        "ID",
        "STRING",
        "NUMBER",
        "MINUS",
        "PLUS",
        "SLASH",
        "EQ",
        "COMMA",
    ]

    t_MINUS = r"-"
    t_PLUS = r"\+"
    t_SLASH = r"/"
    t_EQ = r"="
    t_COMMA = r","

    def t_NUMBER(self, t):
        r"\d+"
        t.value = int(t.value, 10)
        t.lineno = self.position(t.lexpos)
        return t

    def t_ID(self, t):
        r"[a-zA-Z_][a-zA-Z0-9_.:]*"
        t.lineno = self.position(t.lexpos)
        return t

    def t_STRING(self, t):
        r'"[^"]*"'
        t.value = t.value[1:-1]
        t.lineno = self.position(t.lexpos)
        return t

    t_ignore = " \t"

    def t_error(self, t):
        raise generic.ParseError(
            "Illegal character '{}' in value list".format(t.value[0]), self.position(t.lexpos)
        )

    def build(self):
        """
        Initial construction of the scanner.
        """
        self.lexer = lex.lex(module=self)

    def setup(self, text, option):
        """
        Setup scanner for scanning the value of an option.

        @param text: Input text to scan.
        @type  text: C{str}

        @param option: Option name, like C{"--a"}.
        @type  option: C{str}
        """
        self.text = text
        self.option = option
        self.lexer.input(text)

    def position(self, lexpos):
        return generic.OptionPosition(self.option, lexpos + 1)
