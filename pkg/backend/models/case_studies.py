"""
Case Studies
The shifted-Legendre to Bernstein matrix (hypergeometric elements, row and column recurrences,
Lagrange columns, closed forms by row and column), the shifted Chebyshev U to Bernstein
coefficient, the Lagrange-interpolation route and the truncated Chebyshev T mixed sum
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from models.families import (
    Family,
    Orientation,
    classical_poly,
    shifted_legendre_closed,
    shifted_legendre_sum,
)
from models.matrices import CobMatrix, Shape, invert_triangular, matmul
from models.registry import BasisSpec, cob
from utils.errors import SingularMatrixError, WindowError
from utils.exact import Polynomial, binomial, double_factorial, factorial, pochhammer

logger = logging.getLogger(__name__)

LB_GOSPER_NOTE = (
    "No closed form is implemented for the general shifted-Legendre to Bernstein element. "
    "Gosper's algorithm finds none for the composed coefficient sum, so lb_element evaluates "
    "the terminating 3F2 sum and every other route is checked against it."
)


def lb_gosper_note() -> str:
    return LB_GOSPER_NOTE


def _check_grid(n: int, *indices: int) -> None:
    if n < 0 or any(not 0 <= x <= n for x in indices):
        raise WindowError(f"indices {indices} outside 0..{n}")


def _sign(power: int) -> int:
    return -1 if power % 2 else 1


# --- shifted Legendre -> Bernstein elements ------------------------------

def lb_element(n: int, i: int, j: int) -> Fraction:
    """m_(i,j) = (-1)^j 3F2(-j, 1+j, -i; 1, -n; 1), row i and column j"""
    _check_grid(n, i, j)
    total = Fraction(0)
    for v in range(min(i, j) + 1):
        total += (
            pochhammer(-j, v) * pochhammer(1 + j, v) * pochhammer(-i, v)
            / (pochhammer(1, v) * pochhammer(-n, v) * factorial(v))
        )
    return _sign(j) * total


def lb_alpha(n: int, j: int, k: int) -> Fraction:
    """
    Composed coefficient sum for column j and row n-k:
    (-1)^j / C(n,k) * sum_v (-1)^v C(n-v,k) (j+v)! / ((j-v)! (v!)^2)
    """
    _check_grid(n, j, k)
    total = Fraction(0)
    for v in range(min(n - k, j) + 1):
        total += _sign(v) * binomial(n - v, k) * Fraction(factorial(j + v), factorial(j - v) * factorial(v) ** 2)
    return _sign(j) * total / binomial(n, k)


def lb_element_farouki(n: int, i: int, j: int) -> Fraction:
    """1/C(n,i) * sum over v of (-1)^(j+v) C(j,v)^2 C(n-j,i-v)"""
    _check_grid(n, i, j)
    total = Fraction(0)
    for v in range(max(0, i + j - n), min(i, j) + 1):
        total += _sign(j + v) * binomial(j, v) ** 2 * binomial(n - j, i - v)
    return total / binomial(n, i)


def lb_element_skew(n: int, i: int, j: int) -> Fraction:
    """(-1)^j C(n-j,i)/C(n,i) 3F2(-j, -j, -i; 1, n-j-i+1; 1); defined only where n >= i + j"""
    _check_grid(n, i, j)
    if i + j > n:
        raise WindowError(f"the skew form needs n >= i + j, got n={n}, i={i}, j={j}")
    total = Fraction(0)
    for v in range(min(i, j) + 1):
        total += (
            pochhammer(-j, v) ** 2 * pochhammer(-i, v)
            / (pochhammer(1, v) * pochhammer(n - j - i + 1, v) * factorial(v))
        )
    return _sign(j) * binomial(n - j, i) / binomial(n, i) * total


def lb_matrix(n: int) -> CobMatrix:
    if n < 0:
        raise WindowError(f"degree must be non-negative, got {n}")
    return CobMatrix.from_rows([[lb_element(n, i, j) for j in range(n + 1)] for i in range(n + 1)], Shape.FULL)


def lb_composed_matrix(n: int) -> CobMatrix:
    """The same matrix through the direct composition of P* -> x^k and x^k -> Bernstein (ascending)"""
    source = BasisSpec.create(family=Family.SHIFTED_LEGENDRE, orientation=Orientation.DESC, m=0, n=n)
    target = BasisSpec.create(family=Family.BERNSTEIN, orientation=Orientation.ASC, m=0, n=n)
    return cob(source, target, route="compose")


# --- recurrences ---------------------------------------------------------

def lb_column_step(n: int, col_j: Sequence[Fraction], col_j1: Sequence[Fraction], j: int) -> List[Fraction]:
    """Column j+2 from columns j and j+1; needs j <= n-2"""
    if not 0 <= j <= n - 1:
        raise WindowError(f"column recurrence needs 0 <= j <= n-2, got j={j}, n={n}")
    lead = (2 + j) * (1 + j - n)
    if lead == 0:
        raise SingularMatrixError(f"column recurrence has no column {j + 2} for n={n}")
    return [
        ((1 + j) * (2 + j + n) * col_j[i] - (3 + 2 * j) * (2 * i - n) * col_j1[i]) / Fraction(lead)
        for i in range(n + 1)
    ]


def lb_row_step(n: int, row_i: Sequence[Fraction], row_i1: Sequence[Fraction], i: int) -> List[Fraction]:
    """Row i+2 from rows i and i+1; needs i <= n-2"""
    if not 0 <= i <= n - 1:
        raise WindowError(f"row recurrence needs 0 <= i <= n-2, got i={i}, n={n}")
    lead = (2 + i) * (1 + i - n)
    if lead == 0:
        raise SingularMatrixError(f"row recurrence has no row {i + 2} for n={n}")
    result = []
    for j in range(n + 1):
        middle = 2 + 4 * i + 2 * i * i + j + j * j - 3 * n - 2 * i * n
        result.append((-(1 + i) * (i - n) * row_i[j] + middle * row_i1[j]) / Fraction(lead))
    return result


def lb_matrix_by_columns(n: int) -> CobMatrix:
    """Regenerate the matrix from its first two columns"""
    columns = [[Fraction(1)] * (n + 1)]
    if n >= 1:
        columns.append([Fraction(2 * i, n) - 1 for i in range(n + 1)])
    for j in range(n - 1):
        columns.append(lb_column_step(n, columns[j], columns[j + 1], j))
    return CobMatrix.from_rows([[columns[j][i] for j in range(n + 1)] for i in range(n + 1)], Shape.FULL)


def lb_matrix_by_rows(n: int) -> CobMatrix:
    """Regenerate the matrix from its first two rows"""
    rows = [[Fraction(_sign(j)) for j in range(n + 1)]]
    if n >= 1:
        rows.append([_sign(j) * (1 - Fraction(j * (j + 1), n)) for j in range(n + 1)])
    for i in range(n - 1):
        rows.append(lb_row_step(n, rows[i], rows[i + 1], i))
    return CobMatrix.from_rows(rows, Shape.FULL)


# --- closed forms by column and row --------------------------------------

def lb_column_closed(n: int, j: int, i: int) -> Fraction:
    """Closed forms for columns 0..4 and n-3..n, entry in row i"""
    _check_grid(n, i, j)
    if j == 0:
        return Fraction(1)
    if j == 1:
        return Fraction(2 * i, n) - 1
    if j == n:
        return Fraction(_sign(n + i) * binomial(n, i))
    if j == n - 1:
        return lb_penultimate(n, i)
    if j == 2:
        return Fraction(n * n - (6 * i + 1) * n + 6 * i * i, n * (n - 1))
    if j == 3:
        return Fraction((2 * i - n) * (n * n - (10 * i + 3) * n + 10 * i * i + 2), n * (n - 1) * (n - 2))
    if j == n - 2:
        body = n ** 3 - (4 * i + 1) * n ** 2 + 2 * i * (2 * i + 1) * n - 2 * i * i
        return _sign(n + i) * binomial(n, i) * Fraction(body, n * n * (n - 1))
    if j == n - 3:
        body = (n ** 3 - (4 * i + 3) * n ** 2 + (2 * i + 1) * (2 * i + 2) * n - 6 * i * i) * (n - 2 * i)
        return _sign(n + i - 1) * binomial(n, i) * Fraction(body, n * n * (n - 1) * (n - 2))
    if j == 4:
        body = (
            n ** 4
            - (20 * i + 6) * n ** 3
            + (90 * i * i + 30 * i + 11) * n ** 2
            - (140 * i ** 3 + 30 * i * i + 50 * i + 6) * n
            + (70 * i ** 4 + 50 * i * i)
        )
        return Fraction(body, n * (n - 1) * (n - 2) * (n - 3))
    raise WindowError(f"no closed form for column {j} of the degree-{n} matrix")


def lb_row_closed(n: int, i: int, j: int) -> Fraction:
    """Closed forms for rows 0..3, entry in column j"""
    _check_grid(n, i, j)
    s = _sign(j)
    if i == 0:
        return Fraction(s)
    if i == 1:
        return s * (1 - Fraction(j * (j + 1), n))
    quartic = (1 - j) * j * (1 + j) * (2 + j)
    if i == 2:
        return s * (1 - Fraction(2 * j * (j + 1), n) + Fraction(quartic, 2 * (1 - n) * n))
    if i == 3:
        sextic = (1 - j) * (2 - j) * j * (1 + j) * (2 + j) * (3 + j)
        return s * (
            1
            - Fraction(3 * j * (j + 1), n)
            + Fraction(3 * quartic, 2 * (1 - n) * n)
            - Fraction(sextic, 6 * (1 - n) * (2 - n) * n)
        )
    raise WindowError(f"no closed form for row {i}")


def lb_penultimate(n: int, i: int) -> Fraction:
    """Column n-1: (-1)^(n+i) (2i-n)/n C(n,i)"""
    if n < 1:
        raise WindowError("the penultimate column needs n >= 1")
    _check_grid(n, i)
    return _sign(n + i) * Fraction(2 * i - n, n) * binomial(n, i)


def lb_last_column_sum(n: int, i: int) -> Fraction:
    """Column n as (-1)^n sum_v (1+n)_v (-i)_v / (v!)^2"""
    _check_grid(n, i)
    total = sum(
        (pochhammer(1 + n, v) * pochhammer(-i, v) / factorial(v) ** 2 for v in range(i + 1)),
        Fraction(0),
    )
    return _sign(n) * total


def lb_symmetry_holds(n: int) -> bool:
    """m_(n-i,j) = (-1)^j m_(i,j) over the whole matrix"""
    return all(
        lb_element(n, n - i, j) == _sign(j) * lb_element(n, i, j)
        for i in range(n + 1)
        for j in range(n + 1)
    )


# --- Lagrange columns ----------------------------------------------------

def _times_linear(p: Polynomial, root: Fraction) -> Polynomial:
    """p(i) * (i - root)"""
    return p.shift(1) - p.scale(root)


def lagrange_basis(n: int, k: int) -> Polynomial:
    """l_k(i) = prod over v != k of (i - v)/(k - v) on the nodes 0..n"""
    _check_grid(n, k)
    p = Polynomial.monomial(0)
    scale = Fraction(1)
    for v in range(n + 1):
        if v != k:
            p = _times_linear(p, Fraction(v))
            scale *= k - v
    return p.scale(1 / scale)


def falling_basis(k: int) -> Polynomial:
    """(-i)_k = (-i)(-i+1)...(-i+k-1) as a polynomial in i"""
    p = Polynomial.monomial(0)
    for v in range(k):
        # (-i + v) = -(i - v)
        p = -_times_linear(p, Fraction(v))
    return p


def lb_lagrange_column(n: int, j: int) -> Polynomial:
    """Column j as the interpolating polynomial in the row index i"""
    _check_grid(n, j)
    total = Polynomial.zero()
    for v in range(n + 1):
        total = total + lagrange_basis(n, v).scale(lb_element(n, v, j))
    return total


def lagrange_to_monomial(n: int) -> CobMatrix:
    polys = [lagrange_basis(n, k) for k in range(n + 1)]
    return CobMatrix.from_rows([[polys[k].coefficient(d) for k in range(n + 1)] for d in range(n + 1)])


def falling_to_monomial(n: int) -> CobMatrix:
    polys = [falling_basis(k) for k in range(n + 1)]
    return CobMatrix.from_rows([[polys[k].coefficient(d) for k in range(n + 1)] for d in range(n + 1)], Shape.UPPER)


def lagrange_route(n: int) -> Tuple[CobMatrix, CobMatrix, CobMatrix]:
    """(Lagrange -> monomial, monomial -> falling-factorial, their product Lagrange -> falling-factorial)"""
    lagrange = lagrange_to_monomial(n)
    to_falling = invert_triangular(falling_to_monomial(n))
    return lagrange, to_falling, matmul(to_falling, lagrange)


def lb_column_in_falling_basis(n: int, j: int) -> List[Fraction]:
    """Coordinates of column j's interpolating polynomial in the (-i)_k basis"""
    _, _, product = lagrange_route(n)
    column = [lb_element(n, i, j) for i in range(n + 1)]
    return [sum((product.entries[r][c] * column[c] for c in range(n + 1)), Fraction(0)) for r in range(n + 1)]


# --- Legendre difference -------------------------------------------------

def lb_legendre_difference_identity(n: int, x) -> Tuple[Fraction, Fraction]:
    """(P_n(x) - P_(n-1)(x), 2^(1-n)/n * sum_v v C(n,v)^2 (x+1)^(n-v) (x-1)^v)"""
    if n < 1:
        raise WindowError("the Legendre difference needs n >= 1")
    x = Fraction(x)
    lhs = classical_poly(Family.LEGENDRE, n).evaluate(x) - classical_poly(Family.LEGENDRE, n - 1).evaluate(x)
    total = sum(
        (v * binomial(n, v) ** 2 * (x + 1) ** (n - v) * (x - 1) ** v for v in range(n + 1)),
        Fraction(0),
    )
    return lhs, total * Fraction(2) ** (1 - n) / n


# --- shifted Legendre -> monomial recurrences in n -----------------------

def shifted_legendre_even_residual(n: int, l: int) -> Fraction:
    """Recurrence in n for the coefficient with k = 2l; zero whenever n >= 2l"""
    if n < 2 * l or l < 0:
        raise WindowError(f"needs n >= 2l >= 0, got n={n}, l={l}")
    now, after = shifted_legendre_closed(n, 2 * l), shifted_legendre_closed(n + 1, 2 * l)
    return -2 * (-1 + 2 * l - 2 * n) * (-1 + l - n) * now + (-1 + 2 * l - n) ** 2 * after


def shifted_legendre_odd_residual(n: int, l: int) -> Fraction:
    """Recurrence in n for the coefficient with k = 2l+1; zero whenever n >= 2l+1"""
    if n < 2 * l + 1 or l < 0:
        raise WindowError(f"needs n >= 2l+1 >= 1, got n={n}, l={l}")
    now, after = shifted_legendre_closed(n, 2 * l + 1), shifted_legendre_closed(n + 1, 2 * l + 1)
    return -2 * (-1 + 2 * l - 2 * n) * (l - n) * now + (2 * l - n) ** 2 * after


def shifted_legendre_forms_agree(n: int) -> bool:
    return all(shifted_legendre_sum(n, k) == shifted_legendre_closed(n, k) for k in range(n + 1))


# --- shifted Chebyshev U -> Bernstein ------------------------------------

def alqudah_coeff(n: int, k: int) -> Fraction:
    """Coefficient of b_(n-k)^n in U*_n: (-1)^k (n+1) C(n+1/2,n-k) C(n+1/2,k) / (C(n,k) C(n+1/2,n))"""
    _check_grid(n, k)
    half = Fraction(2 * n + 1, 2)
    return (
        _sign(k) * (n + 1) * binomial(half, n - k) * binomial(half, k)
        / (binomial(n, k) * binomial(half, n))
    )


def alqudah_original_coeff(n: int, k: int) -> Fraction:
    """The same coefficient before simplifying C(n+1/2,n)(2n)!! = (2n+1)!!"""
    _check_grid(n, k)
    half = Fraction(2 * n + 1, 2)
    lead = Fraction((n + 1) * double_factorial(2 * n), double_factorial(2 * n + 1))
    return lead * _sign(k) * binomial(half, n - k) * binomial(half, k) / binomial(n, k)


def _shifted_u_coeff(j: int, d: int) -> Fraction:
    """Coefficient of x^d in U*_j"""
    k = j - d
    return sum(
        (
            binomial(j - 2 * v, k - 2 * v) * binomial(j - v, v) * _sign(k - v) * Fraction(2) ** (2 * (j - v) - k)
            for v in range(k // 2 + 1)
        ),
        Fraction(0),
    )


def alqudah_alpha3(n: int, j: int, k: int) -> Fraction:
    """Coefficient of b_(n-k)^n in U*_j through the monomials, for 0 <= j, k <= n"""
    _check_grid(n, j, k)
    return sum(
        (binomial(n - v, k) / binomial(n, k) * _shifted_u_coeff(j, v) for v in range(min(n - k, j) + 1)),
        Fraction(0),
    )


def alqudah_top_form(n: int, k: int) -> Fraction:
    """alqudah_alpha3(n, n, k) with the inner sum rewritten in powers of -2 and -4"""
    _check_grid(n, k)
    total = Fraction(0)
    for v in range(n - k + 1):
        inner = sum(
            (Fraction(-4) ** (-l) * binomial(n - 2 * l, v) * binomial(n - l, l) for l in range((n - v) // 2 + 1)),
            Fraction(0),
        )
        total += Fraction(-2) ** v * binomial(n - v, k) / binomial(n, k) * inner
    return Fraction(-2) ** n * total


def _gamma_over_sqrt_pi(h: Fraction) -> Fraction:
    """Gamma(h)/sqrt(pi) for a half-odd-integer h"""
    if h.denominator != 2:
        raise WindowError(f"expected a half-odd-integer, got {h}")
    value, x = Fraction(1), Fraction(1, 2)
    while x < h:
        value *= x
        x += 1
    while x > h:
        x -= 1
        value /= x
    return value


def alqudah_gamma_form(n: int, k: int) -> Fraction:
    """(-1)^n (n+1) sqrt(pi) Gamma(-1/2-k) / (2 Gamma(-1/2-n) Gamma(3/2-k+n))"""
    _check_grid(n, k)
    num = _gamma_over_sqrt_pi(Fraction(-1, 2) - k)
    den = 2 * _gamma_over_sqrt_pi(Fraction(-1, 2) - n) * _gamma_over_sqrt_pi(Fraction(3, 2) - k + n)
    return _sign(n) * (n + 1) * num / den


def alqudah_recurrence_residual(n: int, k: int) -> Fraction:
    """(-1+2k-2n) S[k] + (-3-2k) S[k+1] with S = alqudah_coeff(n, .); zero for k < n"""
    if not 0 <= k < n:
        raise WindowError(f"recurrence needs 0 <= k < n, got k={k}, n={n}")
    return (-1 + 2 * k - 2 * n) * alqudah_coeff(n, k) + (-3 - 2 * k) * alqudah_coeff(n, k + 1)


def alqudah_from_recurrence(n: int) -> List[Fraction]:
    """S[0..n] from S[0] = n+1 and the first-order recurrence"""
    values = [Fraction(n + 1)]
    for k in range(n):
        values.append(values[-1] * Fraction(-1 + 2 * k - 2 * n, 3 + 2 * k))
    return values


# --- truncated Chebyshev T, ascending to descending ----------------------

def truncated_t_sum(n: int, l: int, k: int) -> Fraction:
    """Entry of cob(T ascending -> T descending) as the direct composition sum"""
    if n < 1 or (n - l) % 2 or not 0 <= l <= n or k < 0:
        raise WindowError(f"invalid arguments n={n}, l={l}, k={k}")
    top = min((n - l) // 2, k)
    return sum(
        (_sign(v) * Fraction(n, n - v) * binomial(n - v, k) * binomial(k, v) for v in range(top + 1)),
        Fraction(0),
    )


def truncated_t_closed(n: int, l: int, k: int) -> Fraction:
    """Closed form of truncated_t_sum; the sign of the general case is (-1)^(V+1)"""
    if n < 1 or (n - l) % 2 or not 0 <= l <= n or k < 0:
        raise WindowError(f"invalid arguments n={n}, l={l}, k={k}")
    if k == 0:
        return Fraction(1)
    cap = min((n - l) // 2, k)
    if cap == k:
        return Fraction(0)
    inner = Fraction(1, cap - n) - Fraction(cap, k * k - k * n)
    return _sign(cap + 1) * n * inner * binomial(n - cap, k) * binomial(k, cap)


def truncated_t_matrix(n: int, m: int) -> CobMatrix:
    """cob(T ascending -> T descending) on [m, n] from the closed form"""
    if (n - m) % 2:
        raise WindowError(f"window [{m}, {n}] needs equal parity")
    half = (n - m) // 2
    rows = [[truncated_t_closed(n, m + 2 * j, half - i) for j in range(half + 1)] for i in range(half + 1)]
    if m == 0:
        # T_0 carries half weight
        rows[0] = [x / 2 for x in rows[0]]
    return CobMatrix.from_rows(rows, Shape.FULL)
