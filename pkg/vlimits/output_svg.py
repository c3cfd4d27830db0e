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

TILE_COLOURS = [
    "#8dd3c7",
    "#ffffb3",
    "#bebada",
    "#fb8072",
    "#80b1d3",
    "#fdb462",
    "#b3de69",
    "#fccde5",
    "#bc80bd",
    "#ccebc5",
]
BOUNDARY_COLOUR = "#444444"


def tile_colour(number):
    return BOUNDARY_COLOUR if number is None else TILE_COLOURS[number % len(TILE_COLOURS)]


def _num(value):
    return "{:.2f}".format(value)


class OutputSVG(output_base.TextOutputBase):
    """
    Class for output of a tiling picture as SVG.
    """

    def __init__(self, filename, width=600, height=400):
        output_base.TextOutputBase.__init__(self, filename)
        self.width = width
        self.height = height

    def write_tiling(self, picture):
        """
        Draw the sampled membership, the lattice translates and the tile centers.

        @param picture: Picture of dimension 1 or 2.
        @type  picture: L{vlimits.tilings.TilingPicture}
        """
        w, h = self.width, self.height
        to_pixel, scale = picture.transform(w, h)
        side = max(picture.sample_size * scale, 1.0)
        band = side if picture.dim == 2 else 40.0

        self.file.write(
            '<svg width="{}" height="{}" viewBox="0 0 {} {}" xmlns="http://www.w3.org/2000/svg">\n'.format(w, h, w, h)
        )
        self.file.write("  <style>\n    text {\n      font-family: Arial, sans-serif;\n")
        self.file.write("      font-size: 10px;\n    }\n  </style>\n")
        self.file.write('  <rect x="0" y="0" width="{}" height="{}" fill="#ffffff" />\n'.format(w, h))
        for point, number in picture.samples:
            x, y = to_pixel(point)
            self.file.write(
                '  <rect x="{}" y="{}" width="{}" height="{}" fill="{}" />\n'.format(
                    _num(x - side / 2), _num(y - band / 2), _num(side), _num(band), tile_colour(number)
                )
            )
        for point in picture.translates:
            x, y = to_pixel(point)
            self.file.write('  <circle cx="{}" cy="{}" r="2" fill="#000000" />\n'.format(_num(x), _num(y)))
        for number, tile in enumerate(picture.tiles):
            x, y = to_pixel(picture.to_plane(tile.center))
            self.file.write(
                '  <circle cx="{}" cy="{}" r="4" fill="{}" stroke="#000000" />\n'.format(
                    _num(x), _num(y), tile_colour(number)
                )
            )
            self.file.write(
                '  <text x="{}" y="{}" fill="#000000">f={}</text>\n'.format(_num(x + 6), _num(y - 6), tile.f.key())
            )
        self.file.write("</svg>\n")
