from fractions import Fraction

import pytest

from vlimits import generic
from vlimits.parser import identifiers, parse_values, values_by_name

EDGES = ["e1", "e2", "e3"]


def values(text, names=EDGES, default=None):
    return values_by_name(parse_values(text, "--a"), names, "--a", default, "edge")


def test_positional():
    assert values("1, -2, 3/4") == [1, -2, Fraction(3, 4)]
    assert values("+2,4/2,-1/3") == [2, 2, Fraction(-1, 3)]


def test_named():
    assert values("e3=5, e1=1/2, e2=-1") == [Fraction(1, 2), -1, 5]
    assert values("e2=7", default=1) == [1, 7, 1]


def test_strings_and_ids():
    items = parse_values('u, "z:e1:1", z:e2:3', "--fire")
    assert [item.value for item in items] == ["u", "z:e1:1", "z:e2:3"]
    assert all(item.name is None for item in items)


def test_empty_value():
    assert parse_values("  ", "--a") == []
    assert values("", names=[]) == []


def test_error_columns():
    with pytest.raises(generic.ParseError) as info:
        values("e1=2, e2=x, e3=1")
    assert info.value.pos.column == 7
    assert str(info.value) == 'option --a, column 7: Expected a number, got "x"'

    with pytest.raises(generic.ParseError) as info:
        values("1 & 2, 3")
    assert info.value.pos.column == 3

    with pytest.raises(generic.ParseError) as info:
        values("1,,2")
    assert info.value.pos.column == 3
    assert "unexpected" in info.value.value

    with pytest.raises(generic.ParseError) as info:
        values("1,")
    assert info.value.pos.column is None


def test_list_errors():
    with pytest.raises(generic.ParseError, match="Expected 3 values, got 2"):
        values("1, 2")
    with pytest.raises(generic.ParseError, match="Mix of named and positional"):
        values("e1=1, 2, 3")
    with pytest.raises(generic.ParseError, match='Unknown edge "e9"'):
        values("e9=1")
    with pytest.raises(generic.ParseError, match='Duplicate edge "e1"'):
        values("e1=1, e1=2, e2=1, e3=1")
    with pytest.raises(generic.ParseError, match='Missing value for edge "e3"'):
        values("e1=1, e2=1")
    with pytest.raises(generic.ParseError, match="Division by zero"):
        values("1/0, 1, 1")


def test_parse_error_exit_code():
    with pytest.raises(generic.ParseError) as info:
        values("1, 2")
    assert info.value.exit_code == generic.EXIT_PARSE


def test_identifiers():
    known = {"u", "v", "z:e1:1"}
    assert identifiers(parse_values("u, z:e1:1", "--fire"), known) == ["u", "z:e1:1"]
    with pytest.raises(generic.ParseError, match='Unknown vertex "w"'):
        identifiers(parse_values("u, w", "--fire"), known)
    with pytest.raises(generic.ParseError, match="Expected a vertex id"):
        identifiers(parse_values("u, 3", "--fire"), known)
    with pytest.raises(generic.ParseError, match="Expected a suite id"):
        identifiers(parse_values("a=b", "--suite"), {"b"}, "suite")
