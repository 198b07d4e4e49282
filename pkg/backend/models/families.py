"""
Polynomial Families
Basis-polynomial constructors and the connection-coefficient functions between each family and the monomials
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple

from utils.errors import KindError, ParityMismatch, WindowError
from utils.exact import Polynomial, binomial, factorial, pochhammer

logger = logging.getLogger(__name__)

Evaluator = Callable[[int, int, int], Fraction]


class Family(str, Enum):
    MONOMIAL = "monomial"
    BERNSTEIN = "bernstein"
    ZERNIKE = "zernike"
    CHEBYSHEV_T = "chebyshev_t"
    CHEBYSHEV_U = "chebyshev_u"
    CHEBYSHEV_V = "chebyshev_v"
    LEGENDRE = "legendre"
    SHIFTED_LEGENDRE = "shifted_legendre"
    SHIFTED_CHEBYSHEV_U = "shifted_chebyshev_u"
    LAGUERRE = "laguerre"
    HERMITE = "hermite"

    @property
    def definite_parity(self) -> bool:
        return self in _DEFINITE

    @property
    def classical(self) -> bool:
        """Families indexed by a single degree and defined by a recurrence"""
        return self not in (Family.MONOMIAL, Family.BERNSTEIN, Family.ZERNIKE)

    @property
    def step(self) -> int:
        return 2 if self.definite_parity else 1


_DEFINITE = frozenset(
    {Family.ZERNIKE, Family.CHEBYSHEV_T, Family.CHEBYSHEV_U, Family.LEGENDRE, Family.HERMITE}
)

# Catalogue shown by the CLI `list` verb and GET /cob/families
FAMILY_INFO: Dict[Family, str] = {
    Family.MONOMIAL: "x^k, the exchange (hub) basis",
    Family.BERNSTEIN: "Bernstein b_m^n(x) = C(n,m) x^m (1-x)^(n-m)",
    Family.ZERNIKE: "Zernike radial R_n^m(x), n and m of equal parity",
    Family.CHEBYSHEV_T: "Chebyshev first kind T_n(x)",
    Family.CHEBYSHEV_U: "Chebyshev second kind U_n(x)",
    Family.CHEBYSHEV_V: "Chebyshev third kind V_n(x) = U_n(x) - U_{n-1}(x)",
    Family.LEGENDRE: "Legendre P_n(x)",
    Family.SHIFTED_LEGENDRE: "shifted Legendre P*_n(x) = P_n(2x-1)",
    Family.SHIFTED_CHEBYSHEV_U: "shifted Chebyshev second kind U*_n(x) = U_n(2x-1)",
    Family.LAGUERRE: "Laguerre L_n(x)",
    Family.HERMITE: "physicists' Hermite H_n(x)",
}


class Orientation(str, Enum):
    """Descending bases fix the minimum degree, ascending bases fix the degree"""

    ASC = "asc"
    DESC = "desc"


class Direction(str, Enum):
    TO_MONOMIAL = "to_monomial"
    FROM_MONOMIAL_ASC = "from_monomial_asc"
    FROM_MONOMIAL_DESC = "from_monomial_desc"
    COMPOSED = "composed"


@dataclass(frozen=True)
class CoeffFn:
    """
    Evaluable connection-coefficient function (n, m, k) -> Rational.

    The default valid domain is (n - m) divisible by `step` and
    0 <= k <= (n - m) / step. Composed functions whose arguments mean
    something else carry their own `domain` predicate. Evaluations are
    memoized per instance.
    """

    name: str
    family: Family
    direction: Direction
    step: int
    evaluator: Evaluator = field(compare=False, repr=False)
    domain: Optional[Callable[[int, int, int], bool]] = field(default=None, compare=False, repr=False)
    band: bool = False

    def __post_init__(self):
        object.__setattr__(self, "_cached", lru_cache(maxsize=None)(self.evaluator))

    def in_domain(self, n: int, m: int, k: int) -> bool:
        if self.domain is not None:
            return self.domain(n, m, k)
        if m < 0 or n < m or (n - m) % self.step:
            return False
        return 0 <= k <= (n - m) // self.step

    def __call__(self, n: int, m: int, k: int) -> Fraction:
        if self.domain is None and self.step == 2 and (n - m) % 2:
            raise ParityMismatch(f"{self.name}: n={n} and m={m} differ in parity")
        if not self.in_domain(n, m, k):
            raise WindowError(f"{self.name}: ({n}, {m}, {k}) is outside the valid domain")
        return self._cached(n, m, k)

    def get(self, n: int, m: int, k: int) -> Fraction:
        """Evaluate, reading anything outside the domain as a structural zero"""
        if not self.in_domain(n, m, k):
            return Fraction(0)
        return self._cached(n, m, k)


def _sign(power: int) -> int:
    return -1 if power % 2 else 1


# --- basis polynomials ---------------------------------------------------

def bernstein_poly(n: int, m: int) -> Polynomial:
    """b_m^n(x) expanded in the monomials"""
    if not 0 <= m <= n:
        raise WindowError(f"Bernstein b_{m}^{n} needs 0 <= m <= n")
    return Polynomial(
        {l: binomial(n, l) * binomial(l, m) * _sign(l - m) for l in range(m, n + 1)}
    )


def zernike_poly(n: int, m: int) -> Polynomial:
    """R_n^m(x) expanded in the monomials"""
    if not 0 <= m <= n:
        raise WindowError(f"Zernike R_{n}^{m} needs 0 <= m <= n")
    if (n - m) % 2:
        raise ParityMismatch(f"Zernike R_{n}^{m} needs n and m of equal parity")
    half = (n - m) // 2
    return Polynomial(
        {
            n - 2 * k: binomial(n - k, k) * binomial(n - 2 * k, half - k) * _sign(k)
            for k in range(half + 1)
        }
    )


_X = Polynomial.monomial(1)
_ONE = Polynomial.monomial(0)


def _shifted_x(p: Polynomial) -> Polynomial:
    """(2x - 1) p(x)"""
    return p.shift(1).scale(2) - p


@lru_cache(maxsize=None)
def classical_poly(family: Family, n: int) -> Polynomial:
    """Monomial expansion of a recurrence-defined family member"""
    if n < 0:
        raise WindowError(f"degree must be non-negative, got {n}")
    if family is Family.MONOMIAL:
        return Polynomial.monomial(n)
    if family is Family.CHEBYSHEV_V:
        if n == 0:
            return _ONE
        return classical_poly(Family.CHEBYSHEV_U, n) - classical_poly(Family.CHEBYSHEV_U, n - 1)
    if family in (Family.BERNSTEIN, Family.ZERNIKE):
        raise KindError(f"{family.value} is indexed by two degrees, not a recurrence")

    if n == 0:
        return _ONE
    if n == 1:
        first = {
            Family.CHEBYSHEV_T: _X,
            Family.CHEBYSHEV_U: _X.scale(2),
            Family.LEGENDRE: _X,
            Family.SHIFTED_LEGENDRE: _shifted_x(_ONE),
            Family.SHIFTED_CHEBYSHEV_U: _shifted_x(_ONE).scale(2),
            Family.LAGUERRE: _ONE - _X,
            Family.HERMITE: _X.scale(2),
        }
        return first[family]

    k = n - 1
    prev, prev2 = classical_poly(family, k), classical_poly(family, k - 1)
    if family in (Family.CHEBYSHEV_T, Family.CHEBYSHEV_U):
        return prev.shift(1).scale(2) - prev2
    if family is Family.SHIFTED_CHEBYSHEV_U:
        return _shifted_x(prev).scale(2) - prev2
    if family is Family.LEGENDRE:
        return (prev.shift(1).scale(2 * k + 1) - prev2.scale(k)).scale(Fraction(1, n))
    if family is Family.SHIFTED_LEGENDRE:
        return (_shifted_x(prev).scale(2 * k + 1) - prev2.scale(k)).scale(Fraction(1, n))
    if family is Family.LAGUERRE:
        return (prev.scale(2 * k + 1) - prev.shift(1) - prev2.scale(k)).scale(Fraction(1, n))
    if family is Family.HERMITE:
        return prev.shift(1).scale(2) - prev2.scale(2 * k)
    raise KindError(f"no recurrence for {family.value}")


def basis_element(family: Family, n: int, m: int) -> Polynomial:
    """F(n, m): the family member of degree n and minimum degree m, truncated below m for classical families"""
    if family is Family.BERNSTEIN:
        return bernstein_poly(n, m)
    if family is Family.ZERNIKE:
        return zernike_poly(n, m)
    if family.definite_parity and (n - m) % 2:
        raise ParityMismatch(f"{family.value}: n={n} and m={m} differ in parity")
    return classical_poly(family, n).truncate(n, m)


# --- coefficient functions -----------------------------------------------

def cf_monomial(step: int = 1) -> CoeffFn:
    return CoeffFn(
        "monomial",
        Family.MONOMIAL,
        Direction.TO_MONOMIAL,
        step,
        lambda n, m, k: Fraction(1 if k == 0 else 0),
    )


def cf_bernstein_to_monomial() -> CoeffFn:
    def alpha(n: int, m: int, k: int) -> Fraction:
        return binomial(n, n - k) * binomial(n - k, m) * _sign(n - m - k)

    return CoeffFn("bernstein->monomial", Family.BERNSTEIN, Direction.TO_MONOMIAL, 1, alpha)


def cf_monomial_to_bernstein_asc() -> CoeffFn:
    def alpha(n: int, m: int, k: int) -> Fraction:
        return binomial(n - m, k) / binomial(n, k)

    return CoeffFn("monomial->bernstein:asc", Family.BERNSTEIN, Direction.FROM_MONOMIAL_ASC, 1, alpha)


def cf_monomial_to_bernstein_desc() -> CoeffFn:
    def alpha(n: int, m: int, k: int) -> Fraction:
        return _sign(n - m - k) * binomial(n, k) / binomial(n, m)

    return CoeffFn("monomial->bernstein:desc", Family.BERNSTEIN, Direction.FROM_MONOMIAL_DESC, 1, alpha)


def cf_zernike_to_monomial() -> CoeffFn:
    def beta(n: int, m: int, k: int) -> Fraction:
        return binomial(n - k, k) * binomial(n - 2 * k, (n - m) // 2 - k) * _sign(k)

    return CoeffFn("zernike->monomial", Family.ZERNIKE, Direction.TO_MONOMIAL, 2, beta)


def cf_monomial_to_zernike_desc() -> CoeffFn:
    def beta(n: int, m: int, k: int) -> Fraction:
        return Fraction(n - 2 * k + 1, n - k + 1) * binomial(n, k) / binomial(n, (n - m) // 2)

    return CoeffFn("monomial->zernike:desc", Family.ZERNIKE, Direction.FROM_MONOMIAL_DESC, 2, beta)


def cf_monomial_to_zernike_asc() -> CoeffFn:
    def beta(n: int, m: int, k: int) -> Fraction:
        v = (n - m) // 2
        if k == v:
            # (m+1)_{-1} (n-2v) = m/m, kept finite at m = 0
            return Fraction(_sign(k)) / binomial(v + m, v)
        return (
            _sign(k)
            * pochhammer(m + 1, v - k - 1)
            * (n - 2 * k)
            / (factorial(v - k) * binomial(v + m, v))
        )

    return CoeffFn("monomial->zernike:asc", Family.ZERNIKE, Direction.FROM_MONOMIAL_ASC, 2, beta)


def _zernike_jacobi_inner(n: int, m: int, k: int) -> Fraction:
    """Monomial to Jacobi P^(m,0) coefficients rewritten for R_{n-2k}^m"""
    v = (n - m) // 2
    total = Fraction(0)
    for l in range(k + 1):
        total += (
            2 ** (v - l)
            * binomial(v, v - l)
            * _sign(l)
            * pochhammer(v + 1 - k, k - l)
            * pochhammer(k - l + 1, v - k)
            / (pochhammer(m + 2, v - l) * pochhammer(v - l + m + 2, v - k))
        )
    return (n - 2 * k + 1) * pochhammer(m + 2, v - k - 1) * total


def cf_monomial_to_zernike_asc_jacobi() -> CoeffFn:
    """
    Second, independent route to the monomial -> Zernike coefficients,
    through the Jacobi form of R_n^m. Its range is the descending basis
    {R_m^m, ..., R_n^m}, so it cross-checks cf_monomial_to_zernike_desc.
    """

    def beta(n: int, m: int, k: int) -> Fraction:
        v = (n - m) // 2
        total = Fraction(0)
        for l in range(k + 1):
            total += binomial(v, l) * _sign(l) * _zernike_jacobi_inner(n - 2 * l, m, k - l)
        return _sign(k) * total / 2 ** v

    return CoeffFn("monomial->zernike:jacobi", Family.ZERNIKE, Direction.FROM_MONOMIAL_DESC, 2, beta)


def cf_laguerre() -> Tuple[CoeffFn, CoeffFn]:
    """(Laguerre -> monomial, monomial -> Laguerre); m is only a window bound"""

    def to_monomial(n: int, m: int, k: int) -> Fraction:
        j = n - k
        return Fraction(_sign(j)) * binomial(n, j) / factorial(j)

    def from_monomial(n: int, m: int, k: int) -> Fraction:
        return pochhammer(-n, n - k) * pochhammer(n - k + 1, k)

    return (
        CoeffFn("laguerre->monomial", Family.LAGUERRE, Direction.TO_MONOMIAL, 1, to_monomial),
        CoeffFn("monomial->laguerre:desc", Family.LAGUERRE, Direction.FROM_MONOMIAL_DESC, 1, from_monomial),
    )


def shifted_legendre_sum(n: int, k: int) -> Fraction:
    """Coefficient of x^(n-k) in P*_n as the sum over pairs of binomials"""
    total = Fraction(0)
    for v in range(k // 2 + 1):
        total += (
            binomial(n - 2 * v, k - 2 * v)
            * binomial(2 * n - 2 * v, n)
            * binomial(n, v)
            * _sign(k - v)
        )
    return total / 2 ** k


def shifted_legendre_closed(n: int, k: int) -> Fraction:
    return Fraction(_sign(k) * factorial(2 * n - k), factorial(k) * factorial(n - k) ** 2)


def cf_shifted_legendre_to_monomial(use_sum: bool = False) -> CoeffFn:
    evaluate = shifted_legendre_sum if use_sum else shifted_legendre_closed
    return CoeffFn(
        "shifted_legendre->monomial" + (":sum" if use_sum else ""),
        Family.SHIFTED_LEGENDRE,
        Direction.TO_MONOMIAL,
        1,
        lambda n, m, k: evaluate(n, k),
    )


def cf_chebyshev_v_to_monomial() -> CoeffFn:
    def alpha(n: int, m: int, k: int) -> Fraction:
        total = Fraction(0)
        for l in range(k + 1):
            total += (
                2 ** l
                * pochhammer(1 + n, n - l)
                * pochhammer(Fraction(1, 2) - n, l)
                / (factorial(k - l) * factorial(l))
            )
        return Fraction(2 ** n) / binomial(2 * n, n) * _sign(k) / factorial(n - k) * total

    return CoeffFn("chebyshev_v->monomial", Family.CHEBYSHEV_V, Direction.TO_MONOMIAL, 1, alpha)


def cf_shifted_chebyshev_u_to_monomial() -> CoeffFn:
    def alpha(n: int, m: int, k: int) -> Fraction:
        total = Fraction(0)
        for v in range(k // 2 + 1):
            total += (
                binomial(n - 2 * v, k - 2 * v)
                * binomial(n - v, v)
                * _sign(k - v)
                * 2 ** (2 * (n - v) - k)
            )
        return total

    return CoeffFn(
        "shifted_chebyshev_u->monomial", Family.SHIFTED_CHEBYSHEV_U, Direction.TO_MONOMIAL, 1, alpha
    )


def cf_hermite_band(n: Optional[int] = None) -> CoeffFn:
    """
    Monomials to the ascending basis of truncations of one Hermite polynomial.
    Only the last two k per column are nonzero. Passing n pins the degree.
    """

    def diagonal(top: int, k: int) -> Fraction:
        return Fraction(_sign(k) * factorial(k) * factorial(top - 2 * k), factorial(top)) * Fraction(2) ** (2 * k - top)

    def beta(top: int, low: int, k: int) -> Fraction:
        if n is not None and top != n:
            raise WindowError(f"band coefficients were pinned to n={n}, got {top}")
        last = (top - low) // 2
        if k == last:
            return diagonal(top, k)
        if k == last - 1:
            return -diagonal(top, k + 1)
        return Fraction(0)

    return CoeffFn("monomial->hermite:band", Family.HERMITE, Direction.FROM_MONOMIAL_ASC, 2, beta, band=True)


def cf_band_inverse(to_cf: CoeffFn) -> CoeffFn:
    """Band inverse of any ascending single-polynomial to-monomial coefficient function"""

    def gamma(n: int, low: int, k: int) -> Fraction:
        last = (n - low) // to_cf.step
        if k == last:
            return 1 / to_cf(n, low, last)
        if k == last - 1:
            return -1 / to_cf(n, low, last)
        return Fraction(0)

    return CoeffFn(
        f"band({to_cf.name})", to_cf.family, Direction.FROM_MONOMIAL_ASC, to_cf.step, gamma, band=True
    )


def cf_classical_to_monomial(family: Family) -> CoeffFn:
    """Coefficient of x^(n - step*k) in F_n, read off the recurrence expansion"""
    if not family.classical:
        raise KindError(f"{family.value} is not a recurrence family")
    step = family.step

    def alpha(n: int, m: int, k: int) -> Fraction:
        return classical_poly(family, n).coefficient(n - step * k)

    return CoeffFn(f"{family.value}->monomial", family, Direction.TO_MONOMIAL, step, alpha)


@lru_cache(maxsize=None)
def _monomial_in_classical(family: Family, n: int) -> Tuple[Tuple[int, Fraction], ...]:
    # x^n = (F_n - sum_{j<n} a_j x^j) / a_n, expanded by back substitution
    poly = classical_poly(family, n)
    lead = poly.coefficient(n)
    result: Dict[int, Fraction] = {n: 1 / lead}
    for j, a_j in poly:
        if j == n:
            continue
        for degree, coeff in _monomial_in_classical(family, j):
            result[degree] = result.get(degree, Fraction(0)) - a_j / lead * coeff
    return tuple(sorted((d, c) for d, c in result.items() if c != 0))


def cf_classical_from_monomial(family: Family) -> CoeffFn:
    """Coefficient of F_(n - step*k) in x^n, exact for every descending window"""
    if not family.classical:
        raise KindError(f"{family.value} is not a recurrence family")
    step = family.step

    def gamma(n: int, m: int, k: int) -> Fraction:
        return dict(_monomial_in_classical(family, n)).get(n - step * k, Fraction(0))

    return CoeffFn(f"monomial->{family.value}:desc", family, Direction.FROM_MONOMIAL_DESC, step, gamma)


def truncate_cf(cf: CoeffFn, shift: int) -> CoeffFn:
    """Re-index a coefficient function for F_(n+shift) truncated to degree n"""
    if shift == 0:
        return cf
    if shift < 0 or shift % cf.step:
        raise ParityMismatch(f"shift {shift} is not a non-negative multiple of {cf.step}")
    offset = shift // cf.step
    return CoeffFn(
        f"{cf.name}@+{shift}",
        cf.family,
        cf.direction,
        cf.step,
        lambda n, m, k: cf(n + shift, m, k + offset),
    )


_TO_MONOMIAL = {
    Family.BERNSTEIN: cf_bernstein_to_monomial,
    Family.ZERNIKE: cf_zernike_to_monomial,
    Family.LAGUERRE: lambda: cf_laguerre()[0],
    Family.SHIFTED_LEGENDRE: cf_shifted_legendre_to_monomial,
    Family.CHEBYSHEV_V: cf_chebyshev_v_to_monomial,
    Family.SHIFTED_CHEBYSHEV_U: cf_shifted_chebyshev_u_to_monomial,
}


@lru_cache(maxsize=None)
def to_monomial_cf(family: Family, step: Optional[int] = None) -> CoeffFn:
    if family is Family.MONOMIAL:
        return cf_monomial(step or 1)
    builder = _TO_MONOMIAL.get(family)
    if builder is not None:
        return builder()
    return cf_classical_to_monomial(family)


@lru_cache(maxsize=None)
def from_monomial_cf(family: Family, orientation: Orientation, step: Optional[int] = None) -> CoeffFn:
    """Coefficient function from the monomials back to the family's window basis"""
    if family is Family.MONOMIAL:
        return cf_monomial(step or 1)
    if family is Family.BERNSTEIN:
        if orientation is Orientation.ASC:
            return cf_monomial_to_bernstein_asc()
        return cf_monomial_to_bernstein_desc()
    if family is Family.ZERNIKE:
        if orientation is Orientation.ASC:
            return cf_monomial_to_zernike_asc()
        return cf_monomial_to_zernike_desc()
    if orientation is Orientation.DESC:
        if family is Family.LAGUERRE:
            return cf_laguerre()[1]
        return cf_classical_from_monomial(family)
    # Ascending classical bases are truncations of the single polynomial F_n
    if family is Family.HERMITE:
        return cf_hermite_band()
    return cf_band_inverse(to_monomial_cf(family))


# --- identities checked numerically --------------------------------------

def zernike_asc_identity_residual(n: int, m: int, h: int) -> Fraction:
    """Sum_l beta1(n, m+2l, v-h) beta(n, m, v-l) over l = 0..h; zero for 0 < h <= v"""
    to_cf, from_cf = cf_zernike_to_monomial(), cf_monomial_to_zernike_asc()
    v = (n - m) // 2
    return sum(
        (to_cf(n, m + 2 * l, v - h) * from_cf(n, m, v - l) for l in range(h + 1)),
        Fraction(0),
    )


def zernike_desc_identity_residual(n: int, m: int, h: int) -> Fraction:
    """Sum_l beta1(n-2l, m, h-l) beta(n, m, l) over l = 0..h; zero for 0 < h <= v"""
    to_cf, from_cf = cf_zernike_to_monomial(), cf_monomial_to_zernike_desc()
    return sum(
        (to_cf(n - 2 * l, m, h - l) * from_cf(n, m, l) for l in range(h + 1)),
        Fraction(0),
    )


def bernstein_desc_identity_residual(n: int, m: int, h: int) -> Fraction:
    """Sum_l alpha1(n-l, m, h-l) alpha(n, m, l) over l = 0..h; zero for 0 < h <= n-m"""
    to_cf, from_cf = cf_bernstein_to_monomial(), cf_monomial_to_bernstein_desc()
    return sum(
        (to_cf(n - l, m, h - l) * from_cf(n, m, l) for l in range(h + 1)),
        Fraction(0),
    )
