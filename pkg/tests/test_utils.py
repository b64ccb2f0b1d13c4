from fractions import Fraction

import pytest

from src.partition import InvalidPartitionError
from src.symring import Basis, SymFunc, gen_h
from src.utils import format_fraction, parse_fraction, parse_partition, render_text


def test_format_fraction():
    """Fracciones en forma canónica, enteros sin denominador."""
    assert format_fraction(Fraction(1, 2)) == "1/2"
    assert format_fraction(3) == "3"
    assert format_fraction(Fraction(-6, 4)) == "-3/2"


@pytest.mark.parametrize("text, expected", [
    ("[3,1]", (3, 1)),
    ("3,1", (3, 1)),
    ("3 1", (3, 1)),
    ("[]", ()),
    ("", ()),
    ("∅", ()),
])
def test_parse_partition(text, expected):
    """Formas aceptadas de escribir una partición."""
    assert parse_partition(text) == expected


@pytest.mark.parametrize("text", ["[1,2]", "a,b", "[1,", '{"x":1}'])
def test_parse_partition_invalida(text):
    """Entradas no decrecientes o mal formadas."""
    with pytest.raises(InvalidPartitionError):
        parse_partition(text)


def test_parse_fraction():
    """Racionales en forma a/b y decimal."""
    assert parse_fraction("-3/4") == Fraction(-3, 4)
    assert parse_fraction("0.5") == Fraction(1, 2)
    with pytest.raises(ValueError):
        parse_fraction("1/0")


def test_render_text():
    """Representación textual por base."""
    assert render_text(gen_h(2)) == "1/2*p[2] + 1/2*p[1,1]"
    assert render_text(SymFunc(Basis.SCHUR, {(1, 1): 1, (): -1})) == "s[1,1] - s[]"
    assert render_text(SymFunc(Basis.H, {(2,): 1, (): -1})) == "h[2] - 1"
    assert render_text(SymFunc.zero(Basis.E)) == "0"
    assert render_text(SymFunc(Basis.P, {(3,): -2})) == "-2*p[3]"
