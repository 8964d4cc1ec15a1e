import pytest

from app.core.exceptions import NotationError
from app.services.notation import parse_element
from app.utils.helper_functions import read_pairs_file, read_semigroup_file


def test_read_semigroup_file(tmp_path):
    path = tmp_path / "s.sgp"
    path.write_text("# comment\n\ndegree 3\n(1 2 3)  # a cycle\n[1 2]\n")
    degree, gens = read_semigroup_file(str(path))
    assert degree == 3
    assert gens == [parse_element("(1 2 3)", 3), parse_element("[1 2]", 3)]


@pytest.mark.parametrize(
    "text",
    ["", "(1 2)\n", "degree x\n(1 2)\n", "degree 3\n", "degree 2\n(1 3)\n"],
)
def test_read_semigroup_file_rejects(tmp_path, text):
    path = tmp_path / "bad.sgp"
    path.write_text(text)
    with pytest.raises(NotationError):
        read_semigroup_file(str(path))


def test_error_names_the_line(tmp_path):
    path = tmp_path / "bad.sgp"
    path.write_text("degree 2\n(1 2)\n(1 3)\n")
    with pytest.raises(NotationError, match=r"bad.sgp:3"):
        read_semigroup_file(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(NotationError):
        read_semigroup_file(str(tmp_path / "nope.sgp"))


def test_read_pairs_file(tmp_path):
    path = tmp_path / "p.prs"
    path.write_text("(1)(2)(3)\t(1 2 3)\n\n[-,-,-,-]\t[1,2,3,4]\n")
    pairs = read_pairs_file(str(path), 4)
    assert pairs == [
        (parse_element("(1)(2)(3)", 4), parse_element("(1 2 3)", 4)),
        (parse_element("[-,-,-,-]", 4), parse_element("[1,2,3,4]", 4)),
    ]


def test_read_pairs_file_needs_two_fields(tmp_path):
    path = tmp_path / "p.prs"
    path.write_text("(1 2 3)\n")
    with pytest.raises(NotationError):
        read_pairs_file(str(path), 4)


def test_empty_pairs_file(tmp_path):
    path = tmp_path / "p.prs"
    path.write_text("")
    assert read_pairs_file(str(path), 4) == []
