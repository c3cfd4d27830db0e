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


from vlimits import output_base


def _quote(text):
    """
    Quote a DOT id; line breaks become the \\n escape.
    """
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


class OutputDOT(output_base.TextOutputBase):
    """
    Class for output of a Hasse diagram in Graphviz DOT format.
    """

    def write_hasse(self, census):
        """
        Write the Hasse diagram of a census; an edge points from a cell to
        the cells it degenerates to.

        @param census: Finished census.
        @type  census: L{vlimits.toric.census.Census}
        """
        self.file.write("digraph limits {\n")
        self.file.write("  rankdir=TB;\n")
        self.file.write("  node [shape=box];\n")
        for desc in census.limits:
            key = desc.cell.key()
            label = "{}\ndim {:d}".format(key, desc.dimension())
            self.file.write("  {} [label={}];\n".format(_quote(key), _quote(label)))
        for i, j in census.hasse:
            self.file.write(
                "  {} -> {};\n".format(_quote(census.limits[i].cell.key()), _quote(census.limits[j].cell.key()))
            )
        self.file.write("}\n")
