import pytest

from app.core.exceptions import NotationError
from app.services.notation import format_cycles, format_image_list, parse_element
from app.services.pperm import PartialPerm


@pytest.mark.parametrize(
    "text, expected",
    [
        ("(1 2 3 4)", "[2,3,4,1]"),
        ("[4 3 2 1]", "[-,1,2,3]"),
        ("[1 2 4] (3)", "[2,4,3,-]"),
        ("(1 2)(3)(4)", "[2,1,3,4]"),
        ("(1)(2)(3)", "[1,2,3,-]"),
        ("()", "[-,-,-,-]"),
        ("[2,3,4,1]", "[2,3,4,1]"),
        ("[-, 1, 2, 3]", "[-,1,2,3]"),
    ],
)
def test_parse_element(text, expected):
    assert repr(parse_element(text, 4)) == expected


@pytest.mark.parametrize(
    "text",
    ["", "(1 2", "[1 2)", "(1 5)", "(1 2)(2 3)", "[1 2](3 1)", "(a b)", "[1,2]", "[1,x,-,-]", "1 2"],
)
def test_parse_rejects(text):
    with pytest.raises(NotationError):
        parse_element(text, 4)


def test_format_cycles():
    assert format_cycles(parse_element("[1 2 4] (3)", 4)) == "[1 2 4](3)"
    assert format_cycles(PartialPerm.identity(3)) == "(1)(2)(3)"
    assert format_cycles(PartialPerm.empty(3)) == "()"
    assert format_cycles(parse_element("(1 3 2)", 4)) == "(1 3 2)"


def test_format_image_list():
    assert format_image_list(parse_element("[4 3 2 1]", 4)) == "[-,1,2,3]"


def test_formats_parse_back(i4):
    for x in i4.elements:
        assert parse_element(format_cycles(x), 4) == x
        assert parse_element(format_image_list(x), 4) == x


@pytest.mark.parametrize(
    "text, expected",
    [("[1]", PartialPerm.identity(1)), ("(1)", PartialPerm.identity(1)), ("[-]", PartialPerm.empty(1)), ("()", PartialPerm.empty(1))],
)
def test_parse_degree_one(text, expected):
    assert parse_element(text, 1) == expected


def test_degree_one_formats_parse_back():
    for x in (PartialPerm.identity(1), PartialPerm.empty(1)):
        assert parse_element(format_image_list(x), 1) == x
        assert parse_element(format_cycles(x), 1) == x


def test_lone_bracket_is_a_chain_above_degree_one():
    assert parse_element("[2]", 4) == PartialPerm.empty(4)
