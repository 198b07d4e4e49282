"""
Golden Fixtures
Published change-of-basis matrices and polynomial representations, each paired with the
builder that must reproduce it entry for entry
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from models.case_studies import lagrange_route, lb_matrix, truncated_t_matrix
from models.families import zernike_poly
from models.matrices import CobMatrix, matmul
from models.registry import BasisSpec, cob, convert, convert_parts, from_hub, reconstruct, to_hub
from models.transforms import superposition_counterexample, truncate_matrix
from utils.descriptors import basis_from_descriptor
from utils.errors import ChangeOfBasisError
from utils.exact import Polynomial, as_rational

logger = logging.getLogger(__name__)

Grid = Sequence[Sequence[object]]


def _b(descriptor: str, n: int, m: Optional[int] = None) -> BasisSpec:
    return basis_from_descriptor(descriptor, n, m)


@dataclass(frozen=True)
class Fixture:
    """`columns` restricts the comparison to the listed columns of `expected`"""

    name: str
    build: Callable[[], CobMatrix]
    expected: Grid
    columns: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class ConversionFixture:
    """Expected coordinates per converted part, in basis order"""

    name: str
    polynomial: Callable[[], Polynomial]
    basis: Callable[[], BasisSpec]
    expected: Tuple[Tuple[object, ...], ...]
    split: bool = True


class FixtureResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


# --- published matrices --------------------------------------------------

_LAGUERRE_TO_MONOMIAL = (
    (1, 1, 1, 1, 1, 1),
    (0, -1, -2, -3, -4, -5),
    (0, 0, "1/2", "3/2", 3, 5),
    (0, 0, 0, "-1/6", "-2/3", "-5/3"),
    (0, 0, 0, 0, "1/24", "5/24"),
    (0, 0, 0, 0, 0, "-1/120"),
)

_MONOMIAL_TO_LAGUERRE = (
    (1, 1, 2, 6, 24, 120),
    (0, -1, -4, -18, -96, -600),
    (0, 0, 2, 18, 144, 1200),
    (0, 0, 0, -6, -96, -1200),
    (0, 0, 0, 0, 24, 600),
    (0, 0, 0, 0, 0, -120),
)

_BERNSTEIN_ASC_7_3 = (
    (35, 0, 0, 0, 0),
    (-140, 35, 0, 0, 0),
    (210, -105, 21, 0, 0),
    (-140, 105, -42, 7, 0),
    (35, -35, 21, -7, 1),
)

_SHIFTED_LEGENDRE_TO_BERNSTEIN_5 = (
    (1, -1, 1, -1, 1, -1),
    (1, "-3/5", "-1/5", "7/5", -3, 5),
    (1, "-1/5", "-4/5", "4/5", 2, -10),
    (1, "1/5", "-4/5", "-4/5", 2, 10),
    (1, "3/5", "-1/5", "-7/5", -3, -5),
    (1, 1, 1, 1, 1, 1),
)

_SUPERPOSED_ZERNIKE_ASC_5_2 = (
    ("-1/3", 0, 0, 0),
    ("1/3", "-1/4", 0, 0),
    (1, "1/4", 1, 0),
    (-1, 1, -1, 1),
)


def _lagrange_part(index: int) -> Callable[[], CobMatrix]:
    return lambda: lagrange_route(5)[index]


FIXTURES: List[Fixture] = [
    Fixture(
        "laguerre from monomials, m=1 n=3",
        lambda: from_hub(_b("laguerre", 3, 1)),
        ((-1, -4, -18), (0, 2, 18), (0, 0, -6)),
    ),
    Fixture(
        "bernstein ascending to monomials, m=3 n=7",
        lambda: to_hub(_b("bernstein:asc", 7, 3)),
        _BERNSTEIN_ASC_7_3,
    ),
    Fixture(
        "chebyshev T even to monomials, m=0 n=6",
        lambda: to_hub(_b("chebyshev_t", 6, 0)),
        ((1, -1, 1, -1), (0, 2, -8, 18), (0, 0, 8, -48), (0, 0, 0, 32)),
    ),
    Fixture(
        "monomials to zernike ascending, m=3 n=9",
        lambda: from_hub(_b("zernike:asc", 9, 3)),
        (("-1/20", 0, 0, 0), ("1/4", "1/21", 0, 0), ("-7/10", "-1/3", "-1/8", 0), ("3/2", "9/7", "9/8", 1)),
    ),
    Fixture(
        "truncated L10 ascending to monomials, m=3 n=6",
        lambda: to_hub(_b("laguerre:asc@10", 6, 3)),
        (
            (-20, 0, 0, 0),
            ("35/4", "35/4", 0, 0),
            ("-21/10", "-21/10", "-21/10", 0),
            ("7/24", "7/24", "7/24", "7/24"),
        ),
    ),
    Fixture(
        "monomials to truncated L10 ascending (band), m=3 n=6",
        lambda: from_hub(_b("laguerre:asc@10", 6, 3)),
        (("-1/20", 0, 0, 0), ("1/20", "4/35", 0, 0), (0, "-4/35", "-10/21", 0), (0, 0, "10/21", "24/7")),
    ),
    Fixture(
        "bernstein ascending to monomials, m=0 n=3",
        lambda: to_hub(_b("bernstein:asc", 3, 0)),
        ((1, 0, 0, 0), (-3, 3, 0, 0), (3, -6, 3, 0), (-1, 3, -3, 1)),
    ),
    Fixture(
        "monomials to bernstein descending, m=3 n=6",
        lambda: from_hub(_b("bernstein", 6, 3)),
        ((1, 1, 1, 1), (0, "-1/4", "-1/2", "-3/4"), (0, 0, "1/10", "3/10"), (0, 0, 0, "-1/20")),
    ),
    Fixture(
        "zernike descending to monomials, m=3 n=9",
        lambda: to_hub(_b("zernike", 9, 3)),
        ((1, -4, 10, -20), (0, 5, -30, 105), (0, 0, 21, -168), (0, 0, 0, 84)),
    ),
    Fixture(
        "monomials to zernike descending, m=0 n=6",
        lambda: from_hub(_b("zernike", 6, 0)),
        ((1, "1/2", "1/3", "1/4"), (0, "1/2", "1/2", "9/20"), (0, 0, "1/6", "1/4"), (0, 0, 0, "1/20")),
    ),
    Fixture(
        "truncated shifted legendre to bernstein, descending, m=4 n=7",
        lambda: cob(_b("shifted_legendre", 7, 4), _b("bernstein", 7, 4)),
        (
            (70, -378, 1302, -3498),
            (0, "-252/5", "924/5", "-2904/5"),
            (0, 0, "308/5", "-572/5"),
            (0, 0, 0, "-3432/35"),
        ),
    ),
    Fixture(
        "truncated V6 to bernstein, ascending, m=3 n=6",
        lambda: cob(_b("chebyshev_v:asc", 6, 3), _b("bernstein:asc", 6, 3)),
        (("8/5", 0, 0, 0), ("16/15", "-16/3", 0, 0), (-16, -32, "-16/3", 0), (-16, -48, 32, 64)),
    ),
    Fixture(
        "monomials to truncated chebyshev T descending, m=3 n=9",
        lambda: from_hub(_b("chebyshev_t", 9, 3)),
        (
            ("1/4", "5/16", "21/64", "21/64"),
            (0, "1/16", "7/64", "9/64"),
            (0, 0, "1/64", "9/256"),
            (0, 0, 0, "1/256"),
        ),
    ),
    Fixture(
        "zernike to truncated chebyshev T, descending, m=3 n=9",
        lambda: cob(_b("zernike", 9, 3), _b("chebyshev_t", 9, 3)),
        ((0, 0, 0, "1/4"), (0, 0, 0, 0), (0, 0, 0, "21/64"), (0, 0, 0, "21/64")),
        columns=(3,),
    ),
    Fixture(
        "zernike to truncated hermite, ascending, m=3 n=9",
        lambda: cob(_b("zernike:asc", 9, 3), _b("hermite:asc", 9, 3)),
        (
            ("1/4032", 0, 0, 0),
            ("31/16128", "1/2304", 0, 0),
            ("37/2304", "13/2304", "1/1152", 0),
            ("7/48", "37/576", "77/4608", "1/512"),
        ),
    ),
    Fixture(
        "truncated chebyshev T ascending to descending, m=1 n=7",
        lambda: cob(_b("chebyshev_t:asc", 7, 1), _b("chebyshev_t", 7, 1)),
        ((0, 7, -35, 35), (0, 0, -14, 21), (0, 0, 0, 7), (1, 1, 1, 1)),
    ),
    Fixture(
        "truncated chebyshev T ascending to descending by closed form, m=1 n=7",
        lambda: truncated_t_matrix(7, 1),
        ((0, 7, -35, 35), (0, 0, -14, 21), (0, 0, 0, 7), (1, 1, 1, 1)),
    ),
    Fixture(
        "monomials to bernstein ascending, m=0 n=5",
        lambda: from_hub(_b("bernstein:asc", 5, 0)),
        (
            (1, 0, 0, 0, 0, 0),
            (1, "1/5", 0, 0, 0, 0),
            (1, "2/5", "1/10", 0, 0, 0),
            (1, "3/5", "3/10", "1/10", 0, 0),
            (1, "4/5", "3/5", "2/5", "1/5", 0),
            (1, 1, 1, 1, 1, 1),
        ),
    ),
    Fixture(
        "shifted legendre to monomials, m=0 n=5",
        lambda: to_hub(_b("shifted_legendre", 5, 0)),
        (
            (1, -1, 1, -1, 1, -1),
            (0, 2, -6, 12, -20, 30),
            (0, 0, 6, -30, 90, -210),
            (0, 0, 0, 20, -140, 560),
            (0, 0, 0, 0, 70, -630),
            (0, 0, 0, 0, 0, 252),
        ),
    ),
    Fixture(
        "shifted legendre to bernstein ascending, n=5",
        lambda: cob(_b("shifted_legendre", 5, 0), _b("bernstein:asc", 5, 0)),
        _SHIFTED_LEGENDRE_TO_BERNSTEIN_5,
    ),
    Fixture(
        "shifted legendre to bernstein ascending by 3F2 elements, n=5",
        lambda: lb_matrix(5),
        _SHIFTED_LEGENDRE_TO_BERNSTEIN_5,
    ),
    Fixture(
        "lagrange interpolation basis to monomials, n=5",
        _lagrange_part(0),
        (
            (1, 0, 0, 0, 0, 0),
            ("-137/60", 5, -5, "10/3", "-5/4", "1/5"),
            ("15/8", "-77/12", "107/12", "-13/2", "61/24", "-5/12"),
            ("-17/24", "71/24", "-59/12", "49/12", "-41/24", "7/24"),
            ("1/8", "-7/12", "13/12", -1, "11/24", "-1/12"),
            ("-1/120", "1/24", "-1/12", "1/12", "-1/24", "1/120"),
        ),
    ),
    Fixture(
        "monomials to rising products of -i, n=5",
        _lagrange_part(1),
        (
            (1, 0, 0, 0, 0, 0),
            (0, -1, -1, -1, -1, -1),
            (0, 0, 1, 3, 7, 15),
            (0, 0, 0, -1, -6, -25),
            (0, 0, 0, 0, 1, 10),
            (0, 0, 0, 0, 0, -1),
        ),
    ),
    Fixture(
        "lagrange interpolation basis to rising products of -i, n=5",
        _lagrange_part(2),
        (
            (1, 0, 0, 0, 0, 0),
            (1, -1, 0, 0, 0, 0),
            ("1/2", -1, "1/2", 0, 0, 0),
            ("1/6", "-1/2", "1/2", "-1/6", 0, 0),
            ("1/24", "-1/6", "1/4", "-1/6", "1/24", 0),
            ("1/120", "-1/24", "1/12", "-1/12", "1/24", "-1/120"),
        ),
    ),
    Fixture(
        "laguerre to monomials, m=0 n=5",
        lambda: to_hub(_b("laguerre", 5, 0)),
        _LAGUERRE_TO_MONOMIAL,
    ),
    Fixture(
        "monomials to laguerre, m=0 n=5",
        lambda: from_hub(_b("laguerre", 5, 0)),
        _MONOMIAL_TO_LAGUERRE,
    ),
    Fixture(
        "tr2,1 of laguerre to monomials",
        lambda: truncate_matrix(to_hub(_b("laguerre", 5, 0)), 2, 1),
        (("1/2", "3/2", 3), (0, "-1/6", "-2/3"), (0, 0, "1/24")),
    ),
    Fixture(
        "tr2,1 of monomials to laguerre",
        lambda: truncate_matrix(from_hub(_b("laguerre", 5, 0)), 2, 1),
        ((2, 18, 144), (0, -6, -96), (0, 0, 24)),
    ),
    Fixture(
        "bernstein descending to monomials, m=2 n=4",
        lambda: to_hub(_b("bernstein", 4, 2)),
        ((1, 3, 6), (0, -3, -12), (0, 0, 6)),
    ),
    Fixture(
        "bernstein to truncated laguerre, descending, m=2 n=4",
        lambda: cob(_b("bernstein", 4, 2), _b("laguerre", 4, 2)),
        ((2, -48, 660), (0, 18, -504), (0, 0, 144)),
    ),
    Fixture(
        "alternating zernike descending to monomials, m=2 n=8",
        lambda: to_hub(_b("zernike:alt", 8, 2)),
        (
            (1, 0, -3, 0, 6, 0, -10),
            (0, 1, 0, -4, 0, 10, 0),
            (0, 0, 4, 0, -20, 0, 60),
            (0, 0, 0, 5, 0, -30, 0),
            (0, 0, 0, 0, 15, 0, -105),
            (0, 0, 0, 0, 0, 21, 0),
            (0, 0, 0, 0, 0, 0, 56),
        ),
    ),
    Fixture(
        "monomials to alternating zernike descending, m=2 n=8",
        lambda: from_hub(_b("zernike:alt", 8, 2)),
        (
            (1, 0, "3/4", 0, "3/5", 0, "1/2"),
            (0, 1, 0, "4/5", 0, "2/3", 0),
            (0, 0, "1/4", 0, "1/3", 0, "5/14"),
            (0, 0, 0, "1/5", 0, "2/7", 0),
            (0, 0, 0, 0, "1/15", 0, "1/8"),
            (0, 0, 0, 0, 0, "1/21", 0),
            (0, 0, 0, 0, 0, 0, "1/56"),
        ),
    ),
    Fixture(
        "monomials to alternating zernike ascending, m=3 n=9",
        lambda: from_hub(_b("zernike:asc:alt", 9, 3)),
        (
            ("-1/20", 0, 0, 0, 0, 0, 0),
            (0, "1/15", 0, 0, 0, 0, 0),
            ("1/4", 0, "1/21", 0, 0, 0, 0),
            (0, "-2/5", 0, "-1/7", 0, 0, 0),
            ("-7/10", 0, "-1/3", 0, "-1/8", 0, 0),
            (0, "4/3", 0, "8/7", 0, 1, 0),
            ("3/2", 0, "9/7", 0, "9/8", 0, 1),
        ),
    ),
    Fixture(
        "alternating zernike ascending to alternating chebyshev T descending, m=0 n=5",
        lambda: cob(_b("zernike:asc:alt", 5, 0), _b("chebyshev_t:alt", 5, 0)),
        (
            ("1/4", 0, 0, 0, "3/8", 0),
            (0, "1/4", 0, "1/8", 0, "5/8"),
            (0, 0, "1/2", 0, "1/2", 0),
            (0, "1/8", 0, "9/16", 0, "5/16"),
            ("3/4", 0, "1/2", 0, "1/8", 0),
            (0, "5/8", 0, "5/16", 0, "1/16"),
        ),
    ),
    Fixture(
        "monomials to superposed zernike ascending, m=2 n=5",
        lambda: from_hub(_b("zernike:asc:sup", 5, 2)),
        _SUPERPOSED_ZERNIKE_ASC_5_2,
    ),
    Fixture(
        "truncated laguerre to monomials, L3..L6 on m=2 n=5",
        lambda: to_hub(_b("laguerre@6", 5, 2)),
        (("3/2", 3, 5, "15/2"), (0, "-2/3", "-5/3", "-10/3"), (0, 0, "5/24", "5/8"), (0, 0, 0, "-1/20")),
    ),
    Fixture(
        "truncated laguerre to superposed zernike ascending, m=2 n=5",
        lambda: cob(_b("laguerre@6", 5, 2), _b("zernike:asc:sup", 5, 2)),
        (
            ("-1/2", -1, "-5/3", "-5/2"),
            ("1/2", "7/6", "25/12", "10/3"),
            ("3/2", "17/6", "115/24", "175/24"),
            ("-3/2", "-11/3", "-55/8", "-1381/120"),
        ),
    ),
    Fixture(
        "monomials to superposed zernike ascending, m=3 n=7",
        lambda: from_hub(_b("zernike:asc:sup", 7, 3)),
        (
            ("1/10", 0, 0, 0, 0),
            ("-1/10", "-1/5", 0, 0, 0),
            ("-2/5", "1/5", "-1/6", 0, 0),
            ("2/5", 1, "1/6", 1, 0),
            (1, -1, 1, -1, 1),
        ),
    ),
    Fixture(
        "bernstein ascending to superposed zernike ascending, m=3 n=7",
        lambda: cob(_b("bernstein:asc", 7, 3), _b("zernike:asc:sup", 7, 3)),
        (
            ("7/2", 0, 0, 0, 0),
            ("49/2", -7, 0, 0, 0),
            (-77, "49/2", "-7/2", 0, 0),
            (-231, "245/2", "-77/2", 7, 0),
            (560, -280, 84, -14, 1),
        ),
    ),
    Fixture(
        "superposition of a product of alternating matrices",
        lambda: superposition_counterexample()[1],
        ((2, 0, 0), (4, 4, 0), (23, 6, 6)),
    ),
    Fixture(
        "product of superposed alternating matrices",
        lambda: superposition_counterexample()[0],
        ((2, 0, 0), (8, 4, 0), (29, 12, 6)),
    ),
]


# --- published polynomial representations --------------------------------

def _sample() -> Polynomial:
    return Polynomial.parse("16x^7 - 12x^5 + 5x^4 + 3x^2")


def wavefront_polynomial() -> Polynomial:
    """4 R_8^2 + 3 R_6^2 - 2 R_4^0 expanded in monomials"""
    return zernike_poly(8, 2).scale(4) + zernike_poly(6, 2).scale(3) - zernike_poly(4, 0).scale(2)


CONVERSIONS: List[ConversionFixture] = [
    ConversionFixture(
        "bernstein ascending representation",
        _sample,
        lambda: _b("bernstein:asc", 7, 2),
        (("1/7", "3/7", 1, "11/7", "6/7", 12),),
    ),
    ConversionFixture(
        "bernstein descending representation",
        _sample,
        lambda: _b("bernstein", 7, 2),
        ((12, -18, "43/2", "-74/5", "16/3", "-16/21"),),
    ),
    ConversionFixture(
        "zernike ascending representation by parity parts",
        _sample,
        lambda: _b("zernike:asc", 8, 2),
        ((-1, 9), (2, 2)),
    ),
    ConversionFixture(
        "zernike descending representation by parity parts",
        _sample,
        lambda: _b("zernike", 8, 2),
        (("27/4", "5/4"), ("12/7", "16/7")),
    ),
    ConversionFixture(
        "x^6 in bernstein descending",
        lambda: Polynomial.monomial(6),
        lambda: _b("bernstein", 6, 3),
        ((1, "-3/4", "3/10", "-1/20"),),
    ),
    ConversionFixture(
        "wavefront in chebyshev T",
        wavefront_polynomial,
        lambda: _b("chebyshev_t", 8, 0),
        (("1/16", "39/32", "-5/16", "73/32", "7/4"),),
    ),
]


# --- checking ------------------------------------------------------------

def _rows(grid: Grid) -> List[List[Fraction]]:
    return [[as_rational(x) for x in row] for row in grid]


def check_fixture(fixture: Fixture) -> FixtureResult:
    try:
        built = fixture.build()
    except ChangeOfBasisError as e:
        return FixtureResult(name=fixture.name, passed=False, detail=f"build failed: {e}")
    expected = _rows(fixture.expected)
    if built.dim != len(expected):
        return FixtureResult(name=fixture.name, passed=False, detail=f"dimension {built.dim} != {len(expected)}")
    columns = fixture.columns if fixture.columns is not None else range(built.dim)
    for j in columns:
        for i in range(built.dim):
            if built.entries[i][j] != expected[i][j]:
                detail = f"entry ({i},{j}) is {built.entries[i][j]}, expected {expected[i][j]}"
                return FixtureResult(name=fixture.name, passed=False, detail=detail)
    return FixtureResult(name=fixture.name, passed=True)


def check_conversion(fixture: ConversionFixture) -> FixtureResult:
    try:
        p = fixture.polynomial()
        basis = fixture.basis()
        vectors = convert_parts(p, basis) if fixture.split else (convert(p, basis),)
    except ChangeOfBasisError as e:
        return FixtureResult(name=fixture.name, passed=False, detail=f"conversion failed: {e}")
    got = tuple(vector.coords for vector in vectors)
    expected = tuple(tuple(as_rational(x) for x in part) for part in fixture.expected)
    if got != expected:
        return FixtureResult(name=fixture.name, passed=False, detail=f"coordinates {got} != {expected}")
    total = Polynomial.zero()
    for vector in vectors:
        total = total + reconstruct(vector)
    if total != p:
        return FixtureResult(name=fixture.name, passed=False, detail="coordinates do not rebuild the polynomial")
    return FixtureResult(name=fixture.name, passed=True)


def run_fixtures() -> List[FixtureResult]:
    results = [check_fixture(f) for f in FIXTURES] + [check_conversion(c) for c in CONVERSIONS]
    failed = [r.name for r in results if not r.passed]
    logger.info(f"fixtures: {len(results) - len(failed)}/{len(results)} reproduced")
    for name in failed:
        logger.warning(f"fixture not reproduced: {name}")
    return results


def lb_triple_holds(n: int = 5) -> bool:
    """from_hub(Bernstein asc) * to_hub(P* desc) is the composed shifted-Legendre matrix"""
    product = matmul(from_hub(_b("bernstein:asc", n, 0)), to_hub(_b("shifted_legendre", n, 0)))
    return product.same_entries(lb_matrix(n))
