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
Exact rational helpers: conversion, floors and the string forms used in every machine-readable output.
"""
from fractions import Fraction

from vlimits import generic


def to_fraction(value, pos=None):
    """
    Convert an input value to an exact rational.

    Integers and C{"p/q"} strings are accepted. Floats are refused, as they
    would silently break exactness.

    @param value: Value to convert.
    @type  value: C{int}, C{str} or L{Fraction}

    @param pos: Position to report on failure.
    @type  pos: L{generic.Position} or C{None}

    @return: The value as a fraction.
    @rtype:  L{Fraction}
    """
    if isinstance(value, bool):
        raise generic.ParseError("Expected a rational number, got a boolean", pos)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise generic.ParseError('"{}" is not a rational number of the form p/q'.format(value), pos)
    if isinstance(value, float):
        raise generic.ParseError("Floating point values are not accepted, write {!r} as a fraction".format(value), pos)
    raise generic.ParseError("Expected a rational number, got {}".format(type(value).__name__), pos)


def to_integer(value, pos=None):
    """
    Convert an input value to an integer, accepting integral rationals like C{"4/2"}.
    """
    frac = to_fraction(value, pos)
    if frac.denominator != 1:
        raise generic.ParseError("Expected an integer, got {}".format(frac), pos)
    return frac.numerator


def is_integral(value):
    return Fraction(value).denominator == 1


def is_half_integral(value):
    return (2 * Fraction(value)).denominator == 1


def floor(value):
    frac = Fraction(value)
    return frac.numerator // frac.denominator


def normalize(value):
    """
    Return an C{int} for integral values and a reduced L{Fraction} otherwise.
    """
    frac = Fraction(value)
    if frac.denominator == 1:
        return frac.numerator
    return frac


def format_rational(value):
    """
    Serialise a rational as C{"p/q"} (or C{"p"} when integral).

    @rtype: C{str}
    """
    return str(Fraction(value))


def format_vector(values):
    """
    Canonical string of a vector of rationals, like C{"(1,1/2)"}.
    """
    return "(" + ",".join(format_rational(v) for v in values) + ")"


def parse_vector(text, pos=None):
    """
    Inverse of L{format_vector}.
    """
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise generic.ParseError('Expected a vector like "(1,1/2)", got "{}"'.format(text), pos)
    body = text[1:-1].strip()
    if body == "":
        return ()
    return tuple(to_fraction(part, pos) for part in body.split(","))


def json_value(value):
    """
    JSON form of a rational: a plain integer when integral, else a C{"p/q"} string.
    """
    value = normalize(value)
    return value if isinstance(value, int) else format_rational(value)
