from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import AG, G2, QA, ZG, ZZ, elements, series_over
from hahnkit.errors import ParseError
from hahnkit.hahn import format_element, format_series, parse_element, parse_series
from hahnkit.oag import Element


def test_element_forms():
    assert parse_element("(1,-2)", ZZ) == Element({0: 1, 1: -2})
    assert parse_element("3/4", AG) == Element({0: F(3, 4)})
    assert parse_element("[0, 1]", ZZ) == Element({1: 1})
    assert parse_element('{"support": [{"index": 1, "value": "1/2"}]}', G2) == Element({1: F(1, 2)})


def test_series_forms():
    x = parse_series("3t^-2 + t", ZG)
    assert x.coefficient(Element({0: -2})) == 3
    y = parse_series("5 + t^(1,2) - 1/2 t^(0,-1)", ZZ)
    assert len(y) == 3 and y.coefficient(Element({1: -1})) == F(-1, 2)
    assert parse_series("-t", ZG).sign == -1


@pytest.mark.parametrize("text,pos", [("1 +", 3), ("x", 0), ("1 2", 2), ("t^", 2)])
def test_series_errors_carry_position(text, pos):
    with pytest.raises(ParseError, match=f"position {pos}"):
        parse_series(text, ZG)


def test_bare_t_needs_single_index():
    with pytest.raises(ParseError):
        parse_series("t", ZZ)


@pytest.mark.parametrize("text", ["(1,x)", "(1,2", "", "1/0"])
def test_element_errors(text):
    with pytest.raises(ParseError):
        parse_element(text, ZZ)


@given(series_over(ZZ))
def test_series_round_trip_lex(x):
    assert parse_series(format_series(x, ZZ), ZZ) == x if x else True


@given(series_over(QA))
def test_series_round_trip_dense(x):
    if x:
        assert parse_series(format_series(x, QA), QA) == x


@given(series_over(AG))
def test_series_round_trip_single(x):
    if x:
        assert parse_series(format_series(x, AG), AG) == x


@given(elements(G2, horizon=4))
def test_element_round_trip(g):
    assert parse_element(format_element(g, G2), G2) == g
