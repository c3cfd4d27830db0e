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


from vlimits import generic, output_base, output_svg

try:
    from PIL import Image, ImageDraw
except ImportError:
    # Pillow is required only for raster output
    Image = None
    pass


class OutputPNG(output_base.ImageOutputBase):
    """
    Class for output of the sampled membership of a tiling picture as PNG.
    """

    def __init__(self, filename, width=600, height=400):
        output_base.ImageOutputBase.__init__(self, filename, (width, height))

    def open(self):
        if Image is None:
            raise generic.DomainError("Pillow was not found, no support for PNG output")
        self.file = Image.new("RGB", self.size, "#ffffff")

    def assemble_file(self, real_file):
        self.file.save(real_file, format="PNG")

    def write_tiling(self, picture):
        """
        @param picture: Picture of dimension 1 or 2.
        @type  picture: L{vlimits.tilings.TilingPicture}
        """
        width, height = self.size
        to_pixel, scale = picture.transform(width, height)
        side = max(picture.sample_size * scale, 1.0)
        band = side if picture.dim == 2 else 40.0
        draw = ImageDraw.Draw(self.file)
        for point, number in picture.samples:
            x, y = to_pixel(point)
            draw.rectangle(
                [x - side / 2, y - band / 2, x + side / 2, y + band / 2], fill=output_svg.tile_colour(number)
            )
        for point in picture.translates:
            x, y = to_pixel(point)
            draw.ellipse([x - 2, y - 2, x + 2, y + 2], fill="#000000")
        for number, tile in enumerate(picture.tiles):
            x, y = to_pixel(picture.to_plane(tile.center))
            draw.ellipse([x - 4, y - 4, x + 4, y + 4], fill=output_svg.tile_colour(number), outline="#000000")
