from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trias.catalog import instantiate, list_entries
from trias.errors import ParseError
from trias.textio import format_mat, format_trias, format_vector, parse_mat, parse_trias

F = Fraction


@pytest.mark.parametrize("id", [e.id for e in list_entries()])
def test_trias_round_trip(id):
    t = instantiate(id)
    back = parse_trias(format_trias(t))
    assert back == t


def test_trias_sample():
    text = """trias v1
dim 2
name sample algebra   # trailing comment
param a -3/2
left 1 1 1 1
right 2 1 2 1/3
"""
    t = parse_trias(text)
    assert t.name == "sample algebra"
    assert t.params == {"a": F(-3, 2)}
    assert t.left[0][0] == (1, 0)
    assert t.right[1][0] == (0, F(1, 3))


@pytest.mark.parametrize(
    "text,line,col,needle",
    [
        ("", 1, 1, "empty"),
        ("trias v2\ndim 2\n", 1, 1, "header"),
        ("trias v1\n", 2, 1, "dim"),
        ("trias v1\ndim x\n", 2, 5, "positive integer"),
        ("trias v1\ndim 2\nleft 1 3 1 1\n", 3, 8, "out of range"),
        ("trias v1\ndim 2\nleft 1 1 1 1\nleft 1 1 1 2\n", 4, 1, "duplicate"),
        ("trias v1\ndim 2\nleft 1 1 1 1/0\n", 3, 12, "denominator"),
        ("trias v1\ndim 2\nouter 1 1 1 1\n", 3, 1, "unknown keyword"),
        ("trias v1\ndim 2\n  left 1 1\n", 3, 3, "expected"),
        ("trias v1\ndim 2\nparam a 1\nparam a 2\n", 4, 7, "duplicate parameter"),
    ],
)
def test_trias_errors(text, line, col, needle):
    with pytest.raises(ParseError) as info:
        parse_trias(text, "x.trias")
    err = info.value
    assert (err.line, err.column) == (line, col)
    assert needle in str(err)
    assert str(err).startswith(f"x.trias:{line}:{col}:")


def test_mat_round_trip_and_rect():
    m = ((F(1), F(-1, 2)), (F(0), F(3)))
    assert parse_mat(format_mat(m)) == m
    rect = ((F(1), F(0), F(2)),)
    assert format_mat(rect).splitlines()[1] == "dim 1 3"
    assert parse_mat(format_mat(rect)) == rect


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("matrix v1\ndim 2\n1 2\n", 4, 1),
        ("matrix v1\ndim 2\n1 2 3\n0 1\n", 3, 5),
        ("matrix v1\ndim 2\n1 2\n0 1\n5 5\n", 5, 1),
        ("matrix v1\ndim 2\n1 q\n0 1\n", 3, 3),
    ],
)
def test_mat_errors(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_mat(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_format_vector():
    assert format_vector((1, 0, 1)) == "e1+e3"
    assert format_vector((0, 0)) == "0"
    assert format_vector((F(-1, 2), 2)) == "-1/2e1+2e2"


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.fractions(max_denominator=9), min_size=3, max_size=3), min_size=3, max_size=3))
def test_mat_round_trip_property(rows):
    m = tuple(tuple(r) for r in rows)
    assert parse_mat(format_mat(m)) == m
