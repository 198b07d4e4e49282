"""
Verification Suites
Named batches of exact checks shared by the CLI `verify` verb and POST /cob/verify:
published fixtures, groupoid laws, the oracle sweep, matrix theorems and the case studies
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

from pydantic import BaseModel

from models import case_studies as cs
from models.families import (
    Family,
    Orientation,
    bernstein_desc_identity_residual,
    cf_monomial_to_zernike_asc_jacobi,
    cf_monomial_to_zernike_desc,
    from_monomial_cf,
    to_monomial_cf,
    zernike_asc_identity_residual,
    zernike_desc_identity_residual,
)
from models.fixtures import run_fixtures
from models.matrices import (
    CobMatrix,
    MatrixKind,
    band_inverse,
    build_matrix,
    compose_cf,
    invert_triangular,
    matmul,
)
from models.oracle import oracle_sweep, self_consistent
from models.registry import BasisSpec, cob, from_hub, to_hub, verify_category
from models.transforms import (
    AlternatingSpec,
    alternate_from_superposed,
    alternating_cf,
    compose_alternating,
    enumerate_truncations,
    invert_alternating,
    superpose_matrix,
    superposition_counterexample,
    truncate_matrix,
)
from utils import config
from utils.errors import ChangeOfBasisError, DescriptorError

logger = logging.getLogger(__name__)

# Failure names kept in a report; the count is always exact
MAX_LISTED_FAILURES = 20


class SuiteReport(BaseModel):
    suite: str
    checked: int = 0
    failed: int = 0
    failures: List[str] = []

    @property
    def passed(self) -> bool:
        return self.failed == 0

    @property
    def first_failure(self) -> Optional[str]:
        return self.failures[0] if self.failures else None

    def record(self, name: str, predicate: Callable[[], bool]) -> None:
        self.checked += 1
        try:
            ok = bool(predicate())
            detail = "" if ok else "does not hold"
        except ChangeOfBasisError as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        if not ok:
            self.failed += 1
            logger.warning(f"{self.suite}: {name} {detail}")
            if len(self.failures) < MAX_LISTED_FAILURES:
                self.failures.append(f"{name}: {detail}")


def _bare(m: CobMatrix) -> CobMatrix:
    return m.with_bases(None, None)


def _spec(family: Family, orientation: Orientation, m: int, n: int, **extra) -> BasisSpec:
    return BasisSpec.create(family=family, orientation=orientation, m=m, n=n, **extra)


_ORIENTATIONS = (Orientation.DESC, Orientation.ASC)
_DEFINITE = [f for f in Family if f.definite_parity]
_STEP_ONE = [f for f in Family if not f.definite_parity and f is not Family.MONOMIAL]


# --- fixtures ------------------------------------------------------------

def fixtures_suite(**_) -> SuiteReport:
    report = SuiteReport(suite="fixtures")
    for result in run_fixtures():
        report.record(result.name if result.passed else f"{result.name} ({result.detail})", lambda r=result: r.passed)
    return report


# --- groupoid ------------------------------------------------------------

def groupoid_bases(n: int, m: int) -> List[List[BasisSpec]]:
    """Bases on [m..n] grouped by monomial step; each group shares one hub"""
    step_one = [BasisSpec.create(family=Family.MONOMIAL, m=m, n=n)]
    step_one += [_spec(f, o, m, n) for f in _STEP_ONE for o in _ORIENTATIONS]
    step_one += [
        _spec(f, o, m, n, alternating=True)
        for f in (Family.ZERNIKE, Family.CHEBYSHEV_T, Family.HERMITE)
        for o in _ORIENTATIONS
    ]
    step_one.append(_spec(Family.ZERNIKE, Orientation.ASC, m, n, superposed=True))
    step_one.append(_spec(Family.CHEBYSHEV_U, Orientation.DESC, m, n, superposed=True))
    groups = [step_one]
    if (n - m) % 2 == 0:
        step_two = [BasisSpec.create(family=Family.MONOMIAL, m=m, n=n, step=2)]
        step_two += [_spec(f, o, m, n) for f in _DEFINITE for o in _ORIENTATIONS]
        groups.append(step_two)
    return groups


def groupoid_suite(n: Optional[int] = None, m: Optional[int] = None, **_) -> SuiteReport:
    n = 9 if n is None else n
    m = 3 if m is None else m
    report = SuiteReport(suite="groupoid")
    for group in groupoid_bases(n, m):
        laws = verify_category(group)
        for check in laws.checks:
            report.record(check.name, lambda c=check: c.passed)
    return report


# --- oracle --------------------------------------------------------------

def oracle_suite(max_n: Optional[int] = None, **_) -> SuiteReport:
    max_n = config.ORACLE_MAX_N if max_n is None else max_n
    report = SuiteReport(suite="oracle")
    sweep = oracle_sweep(max_n)
    report.checked = sweep.checked
    report.failed = len(sweep.failures)
    report.failures = [f"{r.label} at {r.first_mismatch}" for r in sweep.failures[:MAX_LISTED_FAILURES]]
    for source, target in (
        (Family.BERNSTEIN, Family.LAGUERRE),
        (Family.SHIFTED_LEGENDRE, Family.CHEBYSHEV_V),
    ):
        for o in _ORIENTATIONS:
            a, b = _spec(source, o, 0, max_n), _spec(target, o, 0, max_n)
            report.record(f"oracle self-consistency {a.describe()} <-> {b.describe()}", lambda a=a, b=b: self_consistent(a, b))
    return report


# --- theorems ------------------------------------------------------------

_TRUNCATION_PAIRS = ((Family.SHIFTED_LEGENDRE, Family.BERNSTEIN), (Family.LAGUERRE, Family.CHEBYSHEV_V))


def _truncations_commute(product_of: CobMatrix, left: CobMatrix, right: CobMatrix) -> Iterable:
    for k1, k2 in enumerate_truncations(product_of.dim):
        yield (
            f"tr{k1},{k2}",
            lambda k1=k1, k2=k2: truncate_matrix(product_of, k1, k2).same_entries(
                matmul(truncate_matrix(left, k1, k2), truncate_matrix(right, k1, k2))
            ),
        )


def _hub_specs(max_n: int, alternating: bool = False) -> Iterable[BasisSpec]:
    """Full windows [n mod step..n] of every family and orientation"""
    families = _DEFINITE if alternating else [f for f in Family if f is not Family.MONOMIAL]
    for family in families:
        for orientation in _ORIENTATIONS:
            for n in range(max_n + 1):
                step = 1 if alternating else family.step
                yield _spec(family, orientation, n % step, n, alternating=alternating)


def theorems_suite(max_n: Optional[int] = None, **_) -> SuiteReport:
    """
    Truncation against products and inverses on matrices up to 12x12, band
    and alternating inverses against substitution, the superposition round
    trip and its failure to respect products, the connection-coefficient
    identities, and M * M^-1 = I up to n = 16.
    """
    limit = 11 if max_n is None else max_n
    report = SuiteReport(suite="theorems")

    for source, target in _TRUNCATION_PAIRS:
        for o in _ORIENTATIONS:
            for n in range(1, limit + 1):
                a, b = _spec(source, o, 0, n), _spec(target, o, 0, n)
                left, right = _bare(from_hub(b)), _bare(to_hub(a))
                product = matmul(left, right)
                for label, check in _truncations_commute(product, left, right):
                    report.record(f"{label}(MN) = tr(M)tr(N) for {a.describe()} -> {b.describe()}", check)
                inverse = invert_triangular(product)
                for k1, k2 in enumerate_truncations(product.dim):
                    report.record(
                        f"tr{k1},{k2}(M^-1) = tr(M)^-1 for {a.describe()} -> {b.describe()}",
                        lambda k1=k1, k2=k2, p=product, q=inverse: truncate_matrix(q, k1, k2).same_entries(
                            invert_triangular(truncate_matrix(p, k1, k2))
                        ),
                    )

    for spec in _hub_specs(limit):
        if spec.orientation is Orientation.ASC and spec.family.classical:
            report.record(
                f"band inverse {spec.describe()}",
                lambda s=spec: band_inverse(_bare(to_hub(s))).same_entries(invert_triangular(_bare(to_hub(s)))),
            )

    for spec in _hub_specs(limit, alternating=True):
        if spec.n < 1:
            continue
        forward = to_hub(spec)
        layout = AlternatingSpec(spec.orientation, spec.m, spec.n)
        report.record(
            f"alternating inverse {spec.describe()}",
            lambda f=forward, s=spec, l=layout: invert_alternating(
                f, from_monomial_cf(s.family, s.orientation), l
            ).same_entries(invert_triangular(f)),
        )
        for sign in (1, -1):
            report.record(
                f"superposition round trip sign {sign:+d} {spec.describe()}",
                lambda f=forward, sign=sign: alternate_from_superposed(superpose_matrix(f, sign), sign).same_entries(f),
            )

    jacobi, desc = cf_monomial_to_zernike_asc_jacobi(), cf_monomial_to_zernike_desc()
    for n in range(limit + 1):
        report.record(
            f"zernike and bernstein connection identities, n={n}",
            lambda n=n: all(
                zernike_asc_identity_residual(n, m, h) == 0 and zernike_desc_identity_residual(n, m, h) == 0
                for m in range(n % 2, n + 1, 2)
                for h in range(1, (n - m) // 2 + 1)
            )
            and all(bernstein_desc_identity_residual(n, m, h) == 0 for m in range(n + 1) for h in range(1, n - m + 1)),
        )
        report.record(
            f"zernike coefficients through jacobi, n={n}",
            lambda n=n: all(
                jacobi(n, m, k) == desc(n, m, k) for m in range(n % 2, n + 1, 2) for k in range((n - m) // 2 + 1)
            ),
        )

    # Ascending Chebyshev T alternation into ascending Zernike alternation
    kind = MatrixKind(Orientation.ASC, Orientation.ASC, False)
    to_alt = alternating_cf(to_monomial_cf(Family.CHEBYSHEV_T), Orientation.ASC)
    from_alt = alternating_cf(from_monomial_cf(Family.ZERNIKE, Orientation.ASC), Orientation.ASC)
    for n in range(1, limit + 1):
        for m in range(n + 1):
            report.record(
                f"alternating composition skips only zeros, m={m} n={n}",
                lambda n=n, m=m: build_matrix(
                    kind, compose_alternating(kind, from_alt, to_alt, vr_alt=True, rt_alt=True), n, m
                ).same_entries(build_matrix(kind, compose_cf(kind, from_alt, to_alt), n, m)),
            )

    product_of_images, image_of_product = superposition_counterexample()
    report.record("superposition does not respect products", lambda: not product_of_images.same_entries(image_of_product))

    for spec in _hub_specs(16):
        report.record(f"M M^-1 = I for {spec.describe()}", lambda s=spec: matmul(from_hub(s), to_hub(s)).is_identity())
    return report


# --- case studies --------------------------------------------------------

def _grid(n: int) -> Iterable:
    return ((i, j) for i in range(n + 1) for j in range(n + 1))


def case_studies_suite(max_n: Optional[int] = None, **_) -> SuiteReport:
    grid_n = 12 if max_n is None else max_n
    alpha_n = 20 if max_n is None else max_n
    closed_n = 10 if max_n is None else max_n
    report = SuiteReport(suite="case-studies")

    for n in range(grid_n + 1):
        report.record(
            f"3F2 and Farouki sums agree, n={n}",
            lambda n=n: all(cs.lb_element(n, i, j) == cs.lb_element_farouki(n, i, j) for i, j in _grid(n)),
        )
        report.record(
            f"skew 3F2 form on n >= i + j, n={n}",
            lambda n=n: all(
                cs.lb_element_skew(n, i, j) == cs.lb_element(n, i, j) for i, j in _grid(n) if i + j <= n
            ),
        )
        report.record(f"symmetry of rows, n={n}", lambda n=n: cs.lb_symmetry_holds(n))
        report.record(f"composition route, n={n}", lambda n=n: cs.lb_composed_matrix(n).same_entries(cs.lb_matrix(n)))
        if n >= 1:
            report.record(
                f"column recurrence, n={n}",
                lambda n=n: cs.lb_matrix_by_columns(n).same_entries(cs.lb_matrix(n)),
            )
            report.record(f"row recurrence, n={n}", lambda n=n: cs.lb_matrix_by_rows(n).same_entries(cs.lb_matrix(n)))
        report.record(
            f"shifted legendre recurrences in n, n={n}",
            lambda n=n: all(cs.shifted_legendre_even_residual(n, l) == 0 for l in range(n // 2 + 1))
            and all(cs.shifted_legendre_odd_residual(n, l) == 0 for l in range((n - 1) // 2 + 1)),
        )
        report.record(f"shifted legendre sum and closed form, n={n}", lambda n=n: cs.shifted_legendre_forms_agree(n))

    for n in range(alpha_n + 1):
        report.record(
            f"composed coefficient sum, n={n}",
            lambda n=n: all(cs.lb_alpha(n, j, k) == cs.lb_element(n, n - k, j) for j, k in _grid(n)),
        )

    for n in range(1, closed_n + 1):
        report.record(
            f"lagrange columns, n={n}",
            lambda n=n: all(
                cs.lb_lagrange_column(n, j).evaluate(i) == cs.lb_element(n, i, j) for i, j in _grid(n)
            ),
        )
        report.record(
            f"penultimate and last columns, n={n}",
            lambda n=n: all(
                cs.lb_penultimate(n, i) == cs.lb_element(n, i, n - 1)
                and cs.lb_last_column_sum(n, i) == cs.lb_element(n, i, n)
                for i in range(n + 1)
            ),
        )
        report.record(
            f"second column is the ratio of the last two, n={n}",
            lambda n=n: all(
                cs.lb_element(n, i, 1) == cs.lb_penultimate(n, i) / cs.lb_element(n, i, n) for i in range(n + 1)
            ),
        )
        columns = sorted({j for j in (0, 1, 2, 3, 4, n - 3, n - 2, n - 1, n) if 0 <= j <= n})
        report.record(
            f"column closed forms, n={n}",
            lambda n=n, columns=columns: all(
                cs.lb_column_closed(n, j, i) == cs.lb_element(n, i, j) for j in columns for i in range(n + 1)
            ),
        )
        rows = [i for i in range(4) if i <= n]
        report.record(
            f"row closed forms, n={n}",
            lambda n=n, rows=rows: all(
                cs.lb_row_closed(n, i, j) == cs.lb_element(n, i, j) for i in rows for j in range(n + 1)
            ),
        )
        report.record(
            f"legendre difference, n={n}",
            lambda n=n: all(
                lhs == rhs
                for lhs, rhs in (
                    cs.lb_legendre_difference_identity(n, x)
                    for x in (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 3), Fraction(1), Fraction(2))
                )
            ),
        )

    for n in range(closed_n + 1):
        report.record(
            f"shifted chebyshev U to bernstein, n={n}",
            lambda n=n: all(
                cs.alqudah_alpha3(n, n, k) == cs.alqudah_coeff(n, k)
                and cs.alqudah_top_form(n, k) == cs.alqudah_coeff(n, k)
                and cs.alqudah_original_coeff(n, k) == cs.alqudah_coeff(n, k)
                and cs.alqudah_gamma_form(n, k) == cs.alqudah_coeff(n, k)
                for k in range(n + 1)
            )
            and cs.alqudah_from_recurrence(n) == [cs.alqudah_coeff(n, k) for k in range(n + 1)]
            and all(cs.alqudah_recurrence_residual(n, k) == 0 for k in range(n)),
        )

    for n in range(1, closed_n + 1):
        for m in range(n % 2, n + 1, 2):
            report.record(
                f"truncated chebyshev T closed form, m={m} n={n}",
                lambda n=n, m=m: cs.truncated_t_matrix(n, m).same_entries(
                    _bare(
                        cob(
                            _spec(Family.CHEBYSHEV_T, Orientation.ASC, m, n),
                            _spec(Family.CHEBYSHEV_T, Orientation.DESC, m, n),
                        )
                    )
                ),
            )
    return report


SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "fixtures": fixtures_suite,
    "groupoid": groupoid_suite,
    "oracle": oracle_suite,
    "theorems": theorems_suite,
    "case-studies": case_studies_suite,
}

SUITE_INFO: Dict[str, str] = {
    "fixtures": "published matrices and polynomial representations, entry for entry",
    "groupoid": "identity, inverse, composition, associativity and truncation-functor laws on one window",
    "oracle": "formula-built matrices against matrices solved from expanded basis polynomials",
    "theorems": "truncation, band and alternating inverses, superposition, M M^-1 = I",
    "case-studies": "shifted Legendre and shifted Chebyshev U to Bernstein, truncated Chebyshev T",
}


def run_suite(
    name: str,
    n: Optional[int] = None,
    m: Optional[int] = None,
    max_n: Optional[int] = None,
) -> SuiteReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise DescriptorError(f"unknown suite {name!r}, expected one of {', '.join(SUITES)}") from None
    logger.info(f"running suite {name}")
    report = suite(n=n, m=m, max_n=max_n)
    logger.info(f"suite {name}: {report.checked - report.failed}/{report.checked} passed")
    return report
