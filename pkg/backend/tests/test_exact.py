import random
from fractions import Fraction

import pytest

from utils.errors import (
    DescriptorError,
    EmptyTruncation,
    WindowError,
    ZeroPolynomialError,
)
from utils.exact import (
    Parity,
    Polynomial,
    as_rational,
    binomial,
    double_factorial,
    format_rational,
    pochhammer,
)

T7 = Polynomial({7: 64, 5: -112, 3: 56, 1: -7})
U6 = Polynomial({6: 64, 4: -80, 2: 24, 0: -1})
B25 = Polynomial({2: 10, 3: -30, 4: 30, 5: -10})


@pytest.mark.parametrize(
    "r,k,expected",
    [
        (7, 3, 35),
        (Fraction(5, 2), 2, Fraction(15, 8)),
        (3, 5, 0),
        (-1, 3, -1),
        (4, 0, 1),
    ],
)
def test_binomial(r, k, expected) -> None:
    assert binomial(r, k) == expected


def test_binomial_rejects_negative_k() -> None:
    with pytest.raises(WindowError):
        binomial(4, -1)


@pytest.mark.parametrize(
    "x,k,expected",
    [
        (4, 2, 20),
        (4, -1, Fraction(1, 3)),
        (-3, 3, -6),
        (Fraction(1, 2), 0, 1),
    ],
)
def test_pochhammer(x, k, expected) -> None:
    assert pochhammer(x, k) == expected


def test_pochhammer_undefined_at_one_minus_one() -> None:
    with pytest.raises(ZeroDivisionError):
        pochhammer(1, -1)
    with pytest.raises(WindowError):
        pochhammer(3, -2)


@pytest.mark.parametrize("k,expected", [(0, 1), (1, 1), (4, 8), (5, 15), (8, 384)])
def test_double_factorial(k, expected) -> None:
    assert double_factorial(k) == expected


def test_as_rational_coerces_and_rejects() -> None:
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(4) == Fraction(4)
    assert format_rational(Fraction(-7, 3)) == "-7/3"
    assert format_rational(Fraction(6, 3)) == "2"
    with pytest.raises(DescriptorError):
        as_rational("one half")
    with pytest.raises(DescriptorError):
        as_rational(True)


@pytest.mark.parametrize(
    "poly,u,l,expected",
    [
        (T7, 5, 3, Polynomial({5: -112, 3: 56})),
        (U6, 8, 4, Polynomial({6: 64, 4: -80})),
        (B25, 4, 3, Polynomial({3: -30, 4: 30})),
        (T7, 7, 1, T7),
    ],
)
def test_truncate(poly, u, l, expected) -> None:
    assert poly.truncate(u, l) == expected


def test_truncate_errors() -> None:
    with pytest.raises(EmptyTruncation):
        Polynomial({5: 1, 3: 1}).truncate(1, 1)
    with pytest.raises(EmptyTruncation):
        Polynomial({5: 1, 3: 1}).truncate(4, 4)
    with pytest.raises(WindowError):
        B25.truncate(2, 4)
    with pytest.raises(ZeroPolynomialError):
        Polynomial.zero().truncate(3, 0)


def test_truncate_bound_of_other_parity() -> None:
    assert T7.truncate(4, 2) == T7.truncate(3, 3) == Polynomial({3: 56})
    assert U6.truncate(7, 3) == U6.truncate(6, 4)
    assert Polynomial({4: 1, 3: 1}).truncate(3, 3).truncate(4, 0) == Polynomial({3: 1})


def test_truncate_full_window_is_identity() -> None:
    for poly in (T7, U6, B25, Polynomial({0: 3})):
        assert poly.truncate(poly.degree(), poly.min_degree()) == poly


def test_truncations_compose() -> None:
    rng = random.Random(20)
    checked = 0
    for _ in range(300):
        poly = Polynomial({d: rng.randint(-5, 5) for d in rng.sample(range(10), rng.randint(1, 6))})
        if poly.is_zero():
            continue
        l, u = sorted(rng.randint(0, 9) for _ in range(2))
        l2, u2 = sorted(rng.randint(0, 9) for _ in range(2))
        try:
            twice = poly.truncate(u, l).truncate(u2, l2)
        except EmptyTruncation:
            continue
        assert twice == poly.truncate(min(u, u2), max(l, l2))
        checked += 1
    assert checked > 20


def test_parity_and_degrees() -> None:
    assert U6.parity() is Parity.EVEN
    assert T7.parity() is Parity.ODD
    assert B25.parity() is Parity.NONE
    assert (B25.degree(), B25.min_degree()) == (5, 2)
    assert Parity.of_degree(3) is Parity.ODD
    with pytest.raises(ZeroPolynomialError):
        Polynomial.zero().parity()
    with pytest.raises(ZeroPolynomialError):
        Polynomial.zero().degree()


def test_arithmetic_drops_zero_terms() -> None:
    p = Polynomial({2: 1, 1: 3})
    q = Polynomial({2: -1, 0: 5})
    assert p + q == Polynomial({1: 3, 0: 5})
    assert (p - p).is_zero()
    assert p.scale(Fraction(1, 3)) == Polynomial({2: Fraction(1, 3), 1: 1})
    assert 2 * p == p.scale(2)
    assert p.shift(2) == Polynomial({4: 1, 3: 3})
    assert (p.even_part(), p.odd_part()) == (Polynomial({2: 1}), Polynomial({1: 3}))
    assert Polynomial.parse("x^2 - 1").evaluate("1/2") == Fraction(-3, 4)


def test_negative_degree_rejected() -> None:
    with pytest.raises(WindowError):
        Polynomial({-1: 1})


def test_parse_and_render(sample_polynomial) -> None:
    assert sample_polynomial.terms == {7: 16, 5: -12, 4: 5, 2: 3}
    assert sample_polynomial.to_text() == "16x^7-12x^5+5x^4+3x^2"
    assert Polynomial.parse("1/24x^4").coefficient(4) == Fraction(1, 24)
    assert Polynomial.parse("-x + 1") == Polynomial({1: -1, 0: 1})
    assert Polynomial.parse("2*x**3 - x + 1/2").to_text() == "2x^3-x+1/2"
    assert Polynomial.zero().to_text() == "0"


@pytest.mark.parametrize("text", ["", "x^2 x", "x^2 +", "3y"])
def test_parse_rejects_malformed_text(text) -> None:
    with pytest.raises(DescriptorError):
        Polynomial.parse(text)


def test_pairs_round_trip() -> None:
    assert Polynomial.from_pairs(B25.to_pairs()) == B25
    assert hash(Polynomial({1: 2})) == hash(Polynomial([(1, 1), (1, 1)]))
