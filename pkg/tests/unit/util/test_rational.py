from fractions import Fraction

import pytest

from canonstrip.exceptions import InvalidRange, MalformedInput
from canonstrip.util.rational import (
    format_rational,
    parse_range,
    parse_rational,
    parse_rational_list,
)


class TestFormatRational:
    def test_format(self):
        assert format_rational(Fraction(-1, 2)) == "-1/2"
        assert format_rational(3) == "3/1"
        assert format_rational(Fraction(4, 6)) == "2/3"


class TestParseRational:
    def test_parse(self):
        assert parse_rational("3/2") == Fraction(3, 2)
        assert parse_rational(" -7 ") == -7
        assert parse_rational("0.25") == Fraction(1, 4)
        assert parse_rational(5) == 5
        assert parse_rational(Fraction(1, 3)) == Fraction(1, 3)

    def test_invalid(self):
        for text in ["abc", "1/0", "", True]:
            with pytest.raises(MalformedInput):
                parse_rational(text)

    def test_source(self):
        with pytest.raises(MalformedInput) as excinfo:
            parse_rational("x", "--s")
        assert str(excinfo.value) == "--s: 'x' is not an exact rational number."

    def test_list(self):
        assert parse_rational_list("1, 3/2,2,") == [1, Fraction(3, 2), 2]
        with pytest.raises(MalformedInput):
            parse_rational_list(" , ")


class TestParseRange:
    def test_range(self):
        assert parse_range("-2..2") == [-2, -1, 0, 1, 2]
        assert parse_range("0..1:1/2") == [0, Fraction(1, 2), 1]
        assert parse_range("0..1:2/3") == [0, Fraction(2, 3)]
        assert parse_range("5") == [5]

    def test_empty(self):
        with pytest.raises(InvalidRange) as excinfo:
            parse_range("3..1", "--c2")
        assert str(excinfo.value) == "The range --c2=3..1 is empty."

    def test_step(self):
        with pytest.raises(InvalidRange):
            parse_range("0..3:0")
        with pytest.raises(InvalidRange):
            parse_range("0..3:-1")
