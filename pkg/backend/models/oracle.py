"""
Oracle
Ground-truth change-of-basis matrices from expanded basis polynomials, and entrywise comparison with formula-built matrices
"""

import logging
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from models.families import Family, Orientation
from models.matrices import CobMatrix, detect_shape, gauss_solve, invert_triangular, matmul
from models.registry import BasisSpec, basis_polynomials, cob, from_hub, to_hub
from utils import config
from utils.errors import ChangeOfBasisError, DimensionMismatch, SpanError

logger = logging.getLogger(__name__)


class Mismatch(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    i: int
    j: int
    expected: Fraction
    got: Fraction


class OracleReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    label: str = ""
    matched: bool
    first_mismatch: Optional[Mismatch] = None


class SweepReport(BaseModel):
    checked: int = 0
    failures: List[OracleReport] = []

    @property
    def passed(self) -> bool:
        return not self.failures


def _expansion(spec: BasisSpec) -> CobMatrix:
    """Columns are the monomial coordinates of the basis polynomials"""
    polys = basis_polynomials(spec)
    rows = [
        [polys[j].coefficient(spec.m + spec.step * i) for j in range(spec.dimension)]
        for i in range(spec.dimension)
    ]
    return CobMatrix.from_rows(rows, domain_basis=spec, range_basis=spec.hub())


def oracle_matrix(source: BasisSpec, target: BasisSpec) -> CobMatrix:
    """Solve target_expansion * X = source_expansion exactly"""
    if (source.m, source.n, source.step) != (target.m, target.n, target.step):
        raise SpanError(f"{source.describe()} and {target.describe()} span different monomial windows")
    forward = _expansion(source)
    backward = _expansion(target)
    if backward.side() is not None:
        return matmul(invert_triangular(backward), forward)
    rows = gauss_solve(backward.entries, forward.entries)
    return CobMatrix.from_rows(rows, shape=detect_shape(rows), domain_basis=source, range_basis=target)


def compare(formula: CobMatrix, oracle: CobMatrix, label: str = "") -> OracleReport:
    if formula.dim != oracle.dim:
        raise DimensionMismatch(f"cannot compare {formula.dim}x{formula.dim} with {oracle.dim}x{oracle.dim}")
    for i in range(formula.dim):
        for j in range(formula.dim):
            if formula.entries[i][j] != oracle.entries[i][j]:
                mismatch = Mismatch(i=i, j=j, expected=oracle.entries[i][j], got=formula.entries[i][j])
                return OracleReport(label=label, matched=False, first_mismatch=mismatch)
    return OracleReport(label=label, matched=True)


def windows(step: int, max_n: int, min_n: int = 0) -> Iterator[Tuple[int, int]]:
    """Every (m, n) with min_n <= n <= max_n and n - m a multiple of step"""
    for n in range(min_n, max_n + 1):
        for m in range(n % step, n + 1, step):
            yield m, n


def _family_specs(family: Family, max_n: int) -> Iterator[BasisSpec]:
    orientations = [Orientation.DESC] if family is Family.MONOMIAL else [Orientation.DESC, Orientation.ASC]
    for orientation in orientations:
        for m, n in windows(family.step, max_n):
            yield BasisSpec.create(family=family, orientation=orientation, m=m, n=n)


# Family pairs swept through the direct composition route, one per step
COMPOSE_PAIRS: Sequence[Tuple[Family, Family]] = (
    (Family.SHIFTED_LEGENDRE, Family.BERNSTEIN),
    (Family.BERNSTEIN, Family.LAGUERRE),
    (Family.CHEBYSHEV_V, Family.SHIFTED_CHEBYSHEV_U),
    (Family.ZERNIKE, Family.CHEBYSHEV_T),
    (Family.LEGENDRE, Family.ZERNIKE),
    (Family.HERMITE, Family.CHEBYSHEV_U),
)


def _record(report: SweepReport, result: OracleReport) -> None:
    report.checked += 1
    if not result.matched:
        logger.warning(f"oracle mismatch: {result.label} at {result.first_mismatch}")
        report.failures.append(result)


def oracle_sweep(
    max_n: Optional[int] = None,
    families: Optional[Sequence[Family]] = None,
    compose_pairs: Optional[Sequence[Tuple[Family, Family]]] = None,
) -> SweepReport:
    """
    Compare the hub matrices of every family and window with n <= max_n
    against the oracle, then the direct composition route of each family
    pair in all four orientation pairs.
    """
    max_n = config.ORACLE_MAX_N if max_n is None else max_n
    families = list(Family) if families is None else families
    compose_pairs = COMPOSE_PAIRS if compose_pairs is None else compose_pairs
    report = SweepReport()

    for family in families:
        for spec in _family_specs(family, max_n):
            hub = spec.hub()
            _record(report, _safe_compare(f"to_hub {spec.describe()}", lambda s=spec: to_hub(s), spec, hub))
            _record(report, _safe_compare(f"from_hub {spec.describe()}", lambda s=spec: from_hub(s), hub, spec))

    for source_family, target_family in compose_pairs:
        for m, n in windows(source_family.step, max_n):
            for source_orientation in (Orientation.DESC, Orientation.ASC):
                for target_orientation in (Orientation.DESC, Orientation.ASC):
                    source = BasisSpec.create(family=source_family, orientation=source_orientation, m=m, n=n)
                    target = BasisSpec.create(family=target_family, orientation=target_orientation, m=m, n=n)
                    label = f"compose {source.describe()} -> {target.describe()}"
                    _record(
                        report,
                        _safe_compare(label, lambda a=source, b=target: cob(a, b, route="compose"), source, target),
                    )
    logger.info(f"oracle sweep: {report.checked} matrices, {len(report.failures)} mismatches")
    return report


def _safe_compare(label: str, build, source: BasisSpec, target: BasisSpec) -> OracleReport:
    try:
        return compare(build(), oracle_matrix(source, target), label)
    except ChangeOfBasisError as e:
        logger.warning(f"{label} failed to build: {e}")
        return OracleReport(label=f"{label}: {e}", matched=False)


def self_consistent(a: BasisSpec, b: BasisSpec) -> bool:
    """oracle(a, b) * oracle(b, a) is the identity"""
    return matmul(oracle_matrix(b, a), oracle_matrix(a, b)).is_identity()