import warnings

import pytest
from hypothesis import given, settings

from ratpow.errors import ParseError
from ratpow.monomial import VariableContext
from ratpow.textio import NonMinimalInputWarning, parse_ideal, parse_ideal_file, parse_monomial, serialize_ideal

from .conftest import ideals


def test_examples():
    assert parse_ideal("vars x\nx^2").generators == ((2,),)
    J = parse_ideal("vars y z\ny^2\ny*z")
    assert J.context.names == ("y", "z") and J.generators == ((2, 0), (1, 1))


def test_non_minimal_input_warns():
    with pytest.warns(NonMinimalInputWarning):
        I = parse_ideal("vars x\nx^2\nx^3")
    assert I.generators == ((2,),)


def test_notations_and_comments():
    ctx = VariableContext.of("x y z")
    for text in ("x^2*y", "x2y", "x^2y", "x*x*y", " x2 * y "):
        assert parse_monomial(text, ctx) == (2, 1, 0)
    assert parse_monomial("1", ctx) == (0, 0, 0)
    I = parse_ideal("# comment\nvars x y z   # ring\n\nxy^3, xy2z  # two on a line\nx^3y\n")
    assert set(I.generators) == {(1, 3, 0), (1, 2, 1), (3, 1, 0)}


def test_multichar_names():
    ctx = VariableContext.of("y1 y12 z")
    assert parse_monomial("y12^2*y1*z3", ctx) == (1, 2, 3)


def test_zero_and_unit():
    assert parse_ideal("vars x y\nzero").is_zero
    assert parse_ideal("vars x y\n1").is_unit
    with pytest.warns(NonMinimalInputWarning):
        assert parse_ideal("vars x y\n1\nx").is_unit


@pytest.mark.parametrize("text, line, col, fragment", [
    ("vars x\nx^2\nq", 3, 1, "unknown variable"),
    ("vars x y\nx*w^2", 2, 3, "unknown variable"),
    ("vars x\nx^-2", 2, 3, "negative exponent"),
    ("vars x\n", None, None, "no generators"),
    ("x^2\n", 1, 1, "vars"),
    ("vars x\nx^", 2, 3, "exponent"),
])
def test_errors(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_ideal(text, path="f.ideal")
    err = info.value
    assert fragment in err.message
    assert (err.line, err.column) == (line, col)


def test_file_roundtrip(tmp_path):
    p = tmp_path / "J.ideal"
    p.write_text("vars y z\ny*z\ny^2\n", encoding="utf-8")
    J = parse_ideal_file(p)
    assert serialize_ideal(J) == "vars y z\ny^2\nyz\n"


@settings(max_examples=80, deadline=None)
@given(ideals())
def test_roundtrip(I):
    text = serialize_ideal(I)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        again = parse_ideal(text)
    assert again == I
    assert serialize_ideal(again) == text
