from fractions import Fraction

import pytest
from hypothesis import given

from test_core import systems
from vcsets.errors import ParseError
from vcsets.formats import (parse_lin, parse_mat, parse_pts, parse_ssys, parse_system,
                            serialize_mat, serialize_pts, serialize_ssys, serialize_system)
from vcsets.generators import gen_interval_unions


def test_minimal_ssys():
    s = parse_ssys("domain: a\nconcept c: -\n")
    assert s.domain.elements == ("a",) and s.concepts == (0,)


def test_ssys_comments_and_order():
    text = """# header
domain: x y z   # three points
concept big: x y z
concept none: -
concept one: y
"""
    s = parse_ssys(text)
    assert s.bitstrings() == ["000", "010", "111"]
    assert serialize_ssys(s).splitlines()[1] == "concept c0: -"


@pytest.mark.parametrize("text, line, col, fragment", [
    ("domain: a b\nconcept c1: a\nconcept c2: a\n", 3, 9, "duplicate concept contents at line 3"),
    ("domain: a b\nconcept c1: a\nconcept c1: b\n", 3, 9, "duplicate concept name"),
    ("domain: a b\nconcept c1: a q\n", 2, 15, "unknown element 'q'"),
    ("domain: a b\nconcpt c1: a\n", 2, 1, "expected 'concept NAME"),
    ("concept c1: a\n", 1, 1, "expected 'domain:"),
    ("domain: a a\nconcept c: -\n", 1, 11, "duplicate element"),
    ("domain: a\n", 2, 1, "empty family"),
])
def test_ssys_errors(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_ssys(text)
    assert info.value.line == line
    assert info.value.column == col
    assert fragment in str(info.value)


def test_mat_roundtrip_and_errors():
    s = gen_interval_unions(5, 1)
    assert parse_mat(serialize_mat(s)) == s
    with pytest.raises(ParseError, match="columns"):
        parse_mat("concepts=1 elements=3\n01\n")
    with pytest.raises(ParseError, match="duplicate concept contents"):
        parse_mat("concepts=2 elements=2\n01\n01\n")
    with pytest.raises(ParseError, match="announces"):
        parse_mat("concepts=3 elements=2\n01\n11\n")
    with pytest.raises(ParseError) as info:
        parse_mat("concepts=1 elements=2\n0x\n")
    assert (info.value.line, info.value.column) == (2, 2)


@given(systems())
def test_roundtrip_all_formats(s):
    for fmt in ("ssys", "mat", "json"):
        text = serialize_system(s, fmt)
        back = parse_system(text)
        if fmt == "mat":  # the matrix format does not carry identifiers
            assert back.concepts == s.concepts
        else:
            assert back == s


def test_pts_and_lin():
    pts = parse_pts("# comment\n0 1/2\n-3/4 2\n")
    assert pts == [(Fraction(0), Fraction(1, 2)), (Fraction(-3, 4), Fraction(2))]
    assert parse_pts(serialize_pts(pts)) == pts
    with pytest.raises(ParseError, match="denominator"):
        parse_pts("1/-2 3\n")
    with pytest.raises(ParseError, match="duplicate point"):
        parse_pts("1 1\n1 1\n")
    f0, rows = parse_lin("-1 : 1 0\n2/3 : 1 1\n")
    assert f0 == [Fraction(-1), Fraction(2, 3)] and rows == [[1, 0], [1, 1]]
    with pytest.raises(ParseError, match="expected 2"):
        parse_lin("1 : 1 0\n1 : 1\n")
