from fractions import Fraction

import pytest

from models.matrices import CobMatrix, Shape
from utils.errors import DescriptorError
from utils.serialize import (
    coords_to_strings,
    coords_to_text,
    format_decimal,
    matrix_from_csv,
    matrix_from_document,
    matrix_to_csv,
    matrix_to_document,
    matrix_to_text,
)


@pytest.fixture
def upper() -> CobMatrix:
    return CobMatrix.from_rows([[1, Fraction(-1, 2)], [0, 3]])


@pytest.mark.parametrize(
    "value,places,expected",
    [
        (Fraction(1, 3), 4, "0.3333"),
        (Fraction(-1, 20), 3, "-0.050"),
        (Fraction(2, 3), 2, "0.67"),
        (Fraction(7), 0, "7"),
    ],
)
def test_format_decimal(value, places, expected) -> None:
    assert format_decimal(value, places) == expected


def test_text_grid(upper) -> None:
    assert matrix_to_text(upper) == "   1 -1/2\n   0    3"
    assert matrix_to_text(upper, decimal=2) == "   1 -1/2\n   0    3\n\n 1.00 -0.50\n 0.00  3.00"


def test_csv(upper) -> None:
    text = matrix_to_csv(upper)
    assert text == "1,-1/2\n0,3\n"
    parsed = matrix_from_csv(text)
    assert parsed.shape is Shape.UPPER
    assert parsed.same_entries(upper)
    with pytest.raises(DescriptorError):
        matrix_from_csv("\n\n")
    with pytest.raises(DescriptorError):
        matrix_from_csv("1,half\n0,1\n")


def test_document(upper) -> None:
    document = matrix_to_document(upper, decimal=1)
    assert document == {
        "dim": 2,
        "shape": "upper",
        "domain": None,
        "range": None,
        "entries": [["1", "-1/2"], ["0", "3"]],
        "decimal": [["1.0", "-0.5"], ["0.0", "3.0"]],
    }
    assert matrix_from_document(document).same_entries(upper)


@pytest.mark.parametrize(
    "document",
    [{}, {"entries": [["1"]], "shape": "diagonal"}, {"entries": "nope"}, None],
)
def test_malformed_documents(document) -> None:
    with pytest.raises(DescriptorError):
        matrix_from_document(document)


def test_coordinates() -> None:
    coords = (Fraction(1, 2), Fraction(-3))
    assert coords_to_strings(coords) == ["1/2", "-3"]
    assert coords_to_text(coords) == "(1/2, -3)"
    assert coords_to_text(coords, 2) == "(1/2, -3)  ~ (0.50, -3.00)"
