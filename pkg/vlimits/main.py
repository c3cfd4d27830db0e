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


import optparse
import os
import sys

from vlimits import (
    chipfire,
    generic,
    lattice,
    loader,
    output_dot,
    output_json,
    output_png,
    output_svg,
    parser,
    tilings,
    verify,
    version_info,
)
from vlimits.cochain import Cochain0, Cochain1
from vlimits.slopes import TruncationWindow
from vlimits.toric import census

developmode = False  # Give 'nice' error message instead of a stack dump.

version = version_info.get_vlimits_version()

COMMANDS = {
    ("graph", "info"): "graph_info",
    ("limits",): "limits",
    ("tiling", "svg"): "tiling_svg",
    ("chipfire",): "chipfire",
    ("verify",): "verify",
}


def parse_cli(argv):
    """
    Parse the command line, and process options.

    @return: Options, command words and input filename.
    @rtype:  C{tuple} (C{Object}, C{tuple} of C{str}, C{str})
    """
    usage = (
        "Usage: %prog [options] <command> <file>\n"
        "Where <command> is one of: graph info, limits, tiling svg, chipfire, verify\n"
        "and <file> is a graph file (JSON)"
    )

    opt_parser = optparse.OptionParser(usage=usage, version=version_info.get_cli_version())
    opt_parser.set_defaults(
        nmax=2,
        fbox=None,
        window=2,
        n=1,
        seed=0,
        samples=24,
        count=20,
        output="-",
        suites=[],
        normalize=False,
        quiet=False,
        stack=False,
        verbosity=generic.verbosity_level,
    )
    opt_parser.add_option("-s", "--stack", action="store_true", dest="stack", help="Dump stack when an error occurs")
    opt_parser.add_option(
        "-o", "--output", dest="output", metavar="<file>", help="write the main output to <file> [default: stdout]"
    )
    opt_parser.add_option(
        "--nmax", type="int", dest="nmax", metavar="<n>", help="Largest base change exponent [default: %default]"
    )
    opt_parser.add_option(
        "--fbox",
        type="int",
        dest="fbox",
        metavar="<r>",
        help="Bound on |f(v)| of the enumerated functions [default: derived from --window]",
    )
    opt_parser.add_option(
        "--window", type="int", dest="window", metavar="<w>", help="Bound on |alpha_e| of the cells [default: %default]"
    )
    opt_parser.add_option(
        "--n", type="int", dest="n", metavar="<n>", help="Subdivision exponent of a chipfire run [default: %default]"
    )
    opt_parser.add_option("--a", dest="a", metavar="<values>", help="Character a per edge, e.g. 'e1=2, e2=-3/4'")
    opt_parser.add_option("--b", dest="b", metavar="<values>", help="Character b per chord edge of the spanning tree")
    opt_parser.add_option("--b-edges", dest="b_edges", metavar="<values>", help="Character b given on all edges")
    opt_parser.add_option("--bdeg", dest="bdeg", metavar="<values>", help="Multidegree per vertex")
    opt_parser.add_option("--twist", dest="twist", metavar="<values>", help="Twisting per edge")
    opt_parser.add_option("--lengths", dest="lengths", metavar="<values>", help="Edge lengths")
    opt_parser.add_option("--divisor", dest="divisor", metavar="<file>", help="Read the divisor to fire from <file>")
    opt_parser.add_option("--fire", dest="fire", metavar="<vertices>", help="Vertices to fire, in order, e.g. 'u,v'")
    opt_parser.add_option(
        "--normalize",
        action="store_true",
        dest="normalize",
        help="Replace the divisor by its admissible representative before firing",
    )
    opt_parser.add_option(
        "--suite",
        action="append",
        dest="suites",
        metavar="<name>",
        help="Run suite <name>, may be repeated [default: all of {}]".format(", ".join(verify.SUITES)),
    )
    opt_parser.add_option("--seed", type="int", dest="seed", metavar="<k>", help="Random seed [default: %default]")
    opt_parser.add_option(
        "--count", type="int", dest="count", metavar="<k>", help="Random instances per check [default: %default]"
    )
    opt_parser.add_option(
        "--samples",
        type="int",
        dest="samples",
        metavar="<k>",
        help="Samples per generator of a tiling [default: %default]",
    )
    opt_parser.add_option("--dot", dest="dot", metavar="<file>", help="write the Hasse diagram to <file>")
    opt_parser.add_option("--png", dest="png", metavar="<file>", help="write a raster of the tiling to <file>")
    opt_parser.add_option(
        "--sidecar",
        dest="sidecar",
        metavar="<file>",
        help="write the exact tile centers to <file> [default: <output>.json]",
    )
    opt_parser.add_option(
        "--quiet", action="store_true", dest="quiet", help="Disable all warnings. Errors will be printed normally."
    )
    opt_parser.add_option(
        "--verbosity",
        type="int",
        dest="verbosity",
        metavar="<level>",
        help="Set the verbosity level for informational output. [default: %default, max: {}]".format(
            generic.VERBOSITY_MAX
        ),
    )

    opts, args = opt_parser.parse_args(argv)

    generic.set_verbosity(0 if opts.quiet else opts.verbosity)

    if not args:
        opt_parser.print_help()
        sys.exit(generic.EXIT_DOMAIN)
    words = tuple(args[:-1])
    if words not in COMMANDS:
        opt_parser.error("unknown command '{}'".format(" ".join(args)))
    input_filename = args[-1]
    if not os.access(input_filename, os.R_OK):
        raise generic.ParseError('Input file "{}" does not exist'.format(input_filename))

    for name in ("nmax", "window", "n", "count", "samples"):
        generic.check_range(getattr(opts, name), 1, None, "--" + name, generic.OptionPosition("--" + name))
    if opts.fbox is not None:
        generic.check_range(opts.fbox, 1, None, "--fbox", generic.OptionPosition("--fbox"))

    return opts, words, input_filename


def apply_overrides(data, opts):
    """
    Replace values of the graph file by those given on the command line.

    @param data: Contents of the graph file.
    @type  data: L{loader.GraphInput}

    @rtype: L{loader.GraphInput}
    """
    graph = data.graph
    edge_ids = [e.id for e in graph.edges]
    lengths = data.lengths
    if opts.lengths is not None:
        items = parser.parse_values(opts.lengths, "--lengths")
        lengths = parser.values_by_name(items, edge_ids, "--lengths", None, "edge")
        for value, item in zip(lengths, items):
            if value != int(value):
                raise generic.ParseError("Edge lengths are integers", item.pos)
        lengths = [int(value) for value in lengths]
        for value in lengths:
            generic.check_range(value, 1, None, "edge length", generic.OptionPosition("--lengths"))
    twist = data.twist
    if opts.twist is not None:
        items = parser.parse_values(opts.twist, "--twist")
        twist = Cochain1(graph, parser.values_by_name(items, edge_ids, "--twist", 0, "edge"))
    a = data.a
    if opts.a is not None:
        items = parser.parse_values(opts.a, "--a")
        a = parser.values_by_name(items, edge_ids, "--a", 1, "edge")
        _check_nonzero(a, items, "--a")
    b, b_edges = data.b, data.b_edges
    if opts.b is not None and opts.b_edges is not None:
        raise generic.DomainError("Give either --b or --b-edges", generic.OptionPosition("--b-edges"))
    if opts.b is not None:
        items = parser.parse_values(opts.b, "--b")
        chords = lattice.cycle_basis(graph).chord_ids()
        b = dict(zip(chords, parser.values_by_name(items, chords, "--b", 1, "chord edge")))
        _check_nonzero(b.values(), items, "--b")
        b_edges = None
    if opts.b_edges is not None:
        items = parser.parse_values(opts.b_edges, "--b-edges")
        b_edges = parser.values_by_name(items, edge_ids, "--b-edges", 1, "edge")
        _check_nonzero(b_edges, items, "--b-edges")
        b = None
    bdeg = data.bdeg
    if opts.bdeg is not None:
        items = parser.parse_values(opts.bdeg, "--bdeg")
        values = parser.values_by_name(items, graph.vertices, "--bdeg", 0, "vertex")
        for value, item in zip(values, items):
            if value != int(value):
                raise generic.ParseError("Multidegrees are integers", item.pos)
        bdeg = Cochain0(graph, [int(value) for value in values])
    return loader.GraphInput(graph, lengths, twist, a, b, b_edges, bdeg, data.pos)


def _check_nonzero(values, items, option):
    for value in values:
        if value == 0:
            pos = items[0].pos if items else generic.OptionPosition(option)
            raise generic.ParseError("Character values must be nonzero", pos)


def write_json(filename, document):
    with output_json.OutputJSON(filename) as out:
        out.write_document(document)


def graph_info(opts, data):
    graph = data.graph
    document = {
        "vertices": list(graph.vertices),
        "edges": [e.id for e in graph.edges],
        "genus": graph.genus(),
        "spanning_trees": lattice.spanning_tree_count(graph),
        "lattice_index": lattice.lattice_index(graph),
        "coboundary_index": lattice.coboundary_image_index(graph),
        "jacobian": lattice.jacobian_invariants(graph),
    }
    write_json(opts.output, document)


def census_window(opts, ctx):
    if opts.fbox is None:
        return census.default_window(ctx, opts.nmax, opts.window)
    return TruncationWindow(opts.nmax, opts.fbox, opts.window)


def limits(opts, data):
    ctx = data.slope_context()
    window = census_window(opts, ctx)
    generic.print_progress("Enumerating {!r} ...".format(window))
    result = census.y_census(ctx, data.characters(), data.bdeg, window)
    generic.clear_progress()
    write_json(opts.output, result.to_document())
    if opts.dot is not None:
        with output_dot.OutputDOT(opts.dot) as out:
            out.write_hasse(result)
    census.print_stats()


def census_summary(result, dim):
    """
    Census written in place of a tiling that cannot be drawn.
    """
    by_dimension = {}
    for desc in result.limits:
        key = str(desc.dimension())
        by_dimension[key] = by_dimension.get(key, 0) + 1
    summary = {"dimension": dim, "drawn": False, "cells": len(result), "by_dimension": by_dimension}
    summary.update(result.to_document())
    return summary


def tiling_svg(opts, data):
    dim = data.graph.num_vertices - 1
    sidecar = opts.sidecar
    if sidecar is None and opts.output != "-":
        sidecar = os.path.splitext(opts.output)[0] + ".json"
    if dim > 2:
        generic.print_warning(
            generic.Warning.GENERIC,
            "Cannot draw a tiling of dimension {:d}; writing the census (as 'vlimits limits') instead".format(dim),
        )
        ctx = data.slope_context()
        result = census.y_census(ctx, data.characters(), data.bdeg, census_window(opts, ctx))
        write_json(sidecar if sidecar is not None else "-", census_summary(result, dim))
        census.print_stats()
        return
    ctx, _factor = data.integer_context()
    picture = tilings.tiling_picture(ctx, opts.samples, opts.fbox)
    with output_svg.OutputSVG(opts.output) as out:
        out.write_tiling(picture)
    if sidecar is not None:
        write_json(sidecar, picture.sidecar())
    if opts.png is not None:
        with output_png.OutputPNG(opts.png) as out:
            out.write_tiling(picture)
    tilings.print_stats()


def chipfire_run(opts, data):
    if opts.divisor is not None:
        divisor = loader.load_divisor(opts.divisor, data)
    else:
        divisor = chipfire.Divisor.zero(chipfire.Subdivision(data.graph, data.lengths, opts.n))
    if opts.normalize:
        divisor = chipfire.admissible_representative(divisor)
    vertices = []
    if opts.fire is not None:
        vertices = parser.identifiers(parser.parse_values(opts.fire, "--fire"), data.graph.vertex_index)
    for vertex in vertices:
        divisor = chipfire.fire(divisor, vertex)

    graph = data.graph
    document = {
        "n": divisor.subdivision.n,
        "fired": vertices,
        "divisor": divisor.as_dict(),
        "degree": divisor.degree(),
        "admissible": chipfire.is_admissible(divisor),
        "t": {graph.oriented_label(oe): chipfire.t_of(divisor, oe) for oe in graph.oriented_edges()},
    }
    write_json(opts.output, document)


def verify_run(opts, data):
    names = opts.suites or list(verify.SUITES)
    results = verify.run_suites(data, names, opts.seed, opts.count)
    document = {
        "seed": opts.seed,
        "count": opts.count,
        "suites": {name: {"passed": not failures, "failures": failures} for name, failures in results.items()},
    }
    write_json(opts.output, document)
    failed = [name for name, failures in results.items() if failures]
    if failed:
        raise generic.VerificationError("Failed suites: {}".format(", ".join(failed)))


HANDLERS = {
    "graph_info": graph_info,
    "limits": limits,
    "tiling_svg": tiling_svg,
    "chipfire": chipfire_run,
    "verify": verify_run,
}


def main(argv):
    global developmode

    opts, words, input_filename = parse_cli(argv)

    if opts.stack:
        developmode = True

    generic.print_progress("Reading ...")
    data = apply_overrides(loader.load_graph(input_filename), opts)
    generic.clear_progress()

    HANDLERS[COMMANDS[words]](opts, data)


def run():
    try:
        main(sys.argv[1:])

    except generic.ScriptError as ex:
        generic.print_error(str(ex))

        if developmode:
            raise  # Reraise exception in developmode
        sys.exit(ex.exit_code)

    except SystemExit:
        raise

    except KeyboardInterrupt:
        generic.print_error("Application forcibly terminated by user.")

        if developmode:
            raise  # Reraise exception in developmode

        sys.exit(1)

    except Exception as ex:  # Other/internal error.
        if developmode:
            raise  # Reraise exception in developmode

        # User mode: print user friendly error message.
        ex_msg = str(ex)
        if len(ex_msg) > 0:
            ex_msg = '"{}"'.format(ex_msg)

        traceback = sys.exc_info()[2]
        # Walk through the traceback object until we get to the point where the exception happened.
        while traceback.tb_next is not None:
            traceback = traceback.tb_next

        lineno = traceback.tb_lineno
        frame = traceback.tb_frame
        code = frame.f_code
        filename = code.co_filename
        name = code.co_name
        del traceback  # Required according to Python docs.

        ex_data = {
            "class": ex.__class__.__name__,
            "version": version,
            "msg": ex_msg,
            "cli": sys.argv,
            "loc": 'File "{}", line {:d}, in {}'.format(filename, lineno, name),
        }

        msg = (
            "vlimits: An internal error has occurred:\n"
            "vlimits-version: {version}\n"
            "Error:    ({class}) {msg}.\n"
            "Command:  {cli}\n"
            "Location: {loc}\n".format(**ex_data)
        )

        generic.print_error(msg)
        sys.exit(1)

    sys.exit(0)


if __name__ == "__main__":
    run()
