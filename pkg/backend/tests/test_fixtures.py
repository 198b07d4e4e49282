import pytest

from models.fixtures import (
    CONVERSIONS,
    FIXTURES,
    Fixture,
    check_conversion,
    check_fixture,
    lb_triple_holds,
    run_fixtures,
    wavefront_polynomial,
)
from models.matrices import identity
from utils.exact import Polynomial


@pytest.mark.parametrize("fixture", FIXTURES, ids=lambda f: f.name)
def test_published_matrix(fixture) -> None:
    result = check_fixture(fixture)
    assert result.passed, result.detail


@pytest.mark.parametrize("fixture", CONVERSIONS, ids=lambda f: f.name)
def test_published_representation(fixture) -> None:
    result = check_conversion(fixture)
    assert result.passed, result.detail


def test_check_fixture_reports_the_first_bad_entry() -> None:
    result = check_fixture(Fixture("identity", lambda: identity(2), ((1, 0), (1, 1))))
    assert not result.passed
    assert result.detail == "entry (1,0) is 0, expected 1"
    shorter = check_fixture(Fixture("identity", lambda: identity(2), ((1,),)))
    assert shorter.detail == "dimension 2 != 1"
    partial = check_fixture(Fixture("identity", lambda: identity(2), ((1, 9), (0, 9)), columns=(0,)))
    assert partial.passed


def test_wavefront_polynomial() -> None:
    assert wavefront_polynomial() == Polynomial.parse("224x^8 - 375x^6 + 168x^4 - 10x^2 - 2")


def test_run_fixtures() -> None:
    results = run_fixtures()
    assert len(results) == len(FIXTURES) + len(CONVERSIONS)
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]
    assert lb_triple_holds(5)
