import pytest

from models.families import Family, Orientation
from models.matrices import CobMatrix
from models.oracle import COMPOSE_PAIRS, compare, oracle_matrix, oracle_sweep, self_consistent, windows
from models.registry import BasisSpec, cob
from utils.errors import DimensionMismatch, SpanError


def spec(family, orientation, m, n) -> BasisSpec:
    return BasisSpec.create(family=family, orientation=orientation, m=m, n=n)


def test_windows() -> None:
    assert list(windows(2, 3)) == [(0, 0), (1, 1), (0, 2), (2, 2), (1, 3), (3, 3)]
    assert list(windows(1, 2, min_n=1)) == [(0, 1), (1, 1), (0, 2), (1, 2), (2, 2)]


@pytest.mark.parametrize(
    "source,target",
    [
        (spec(Family.BERNSTEIN, Orientation.DESC, 0, 4), spec(Family.LAGUERRE, Orientation.ASC, 0, 4)),
        (spec(Family.ZERNIKE, Orientation.ASC, 1, 7), spec(Family.HERMITE, Orientation.DESC, 1, 7)),
        (spec(Family.CHEBYSHEV_V, Orientation.ASC, 2, 5), spec(Family.SHIFTED_LEGENDRE, Orientation.DESC, 2, 5)),
    ],
)
def test_oracle_agrees_with_hub_route(source, target) -> None:
    report = compare(cob(source, target), oracle_matrix(source, target), "hub")
    assert report.matched, report.first_mismatch
    assert self_consistent(source, target)


def test_oracle_needs_one_window() -> None:
    with pytest.raises(SpanError):
        oracle_matrix(spec(Family.BERNSTEIN, Orientation.DESC, 0, 3), spec(Family.BERNSTEIN, Orientation.DESC, 1, 3))


def test_compare_reports_first_mismatch() -> None:
    formula = CobMatrix.from_rows([[1, 0], [0, 1]])
    oracle = CobMatrix.from_rows([[1, 0], [0, 2]])
    report = compare(formula, oracle, "diag")
    assert not report.matched
    assert (report.first_mismatch.i, report.first_mismatch.j) == (1, 1)
    assert (report.first_mismatch.expected, report.first_mismatch.got) == (2, 1)
    assert compare(oracle, oracle).matched
    with pytest.raises(DimensionMismatch):
        compare(formula, CobMatrix.from_rows([[1]]))


def test_small_sweep() -> None:
    report = oracle_sweep(max_n=3)
    assert report.passed, [f.label for f in report.failures]
    assert report.checked > 0


def test_sweep_restricted_to_a_family() -> None:
    report = oracle_sweep(max_n=4, families=[Family.ZERNIKE], compose_pairs=COMPOSE_PAIRS[3:4])
    assert report.passed, [f.label for f in report.failures]
    # 2 orientations x 9 windows x 2 directions, then 9 windows x 4 orientation pairs
    assert report.checked == 2 * 9 * 2 + 9 * 4
