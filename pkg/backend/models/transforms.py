"""
Matrix Transforms
Truncation of change-of-basis matrices, alternating bases and superposition
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from models.families import CoeffFn, Direction, Orientation
from models.matrices import (
    CobMatrix,
    MatrixKind,
    Shape,
    build_matrix,
    compose_cf,
    matmul,
)
from utils.errors import InverseMismatch, KindError, ShapeError, WindowError

logger = logging.getLogger(__name__)


# --- truncation ----------------------------------------------------------

def truncate_matrix(m: CobMatrix, k1: int, k2: int) -> CobMatrix:
    """tr_{k1,k2}: drop the first k1 and last k2 rows and columns of a triangular matrix"""
    if m.side() is None:
        raise ShapeError("only triangular matrices can be truncated")
    if k1 < 0 or k2 < 0 or not 0 < k1 + k2 < m.dim:
        raise WindowError(f"tr_{{{k1},{k2}}} needs 0 < k1 + k2 < {m.dim}")
    keep = range(k1, m.dim - k2)
    rows = [[m.entries[i][j] for j in keep] for i in keep]
    shape = m.shape if m.shape is not Shape.BAND else (Shape.UPPER if m.side() == "upper" else Shape.LOWER)
    domain = m.domain_basis.truncated(k1, k2) if m.domain_basis is not None else None
    rng = m.range_basis.truncated(k1, k2) if m.range_basis is not None else None
    return CobMatrix.from_rows(rows, shape, domain_basis=domain, range_basis=rng)


def count_truncations(b: int) -> int:
    if b < 2:
        raise WindowError(f"a {b}x{b} matrix has no proper truncation")
    return b * (b + 1) // 2 - 1


def enumerate_truncations(b: int) -> Iterator[Tuple[int, int]]:
    """Every (k1, k2) with 0 < k1 + k2 < b"""
    count_truncations(b)
    for k1 in range(b):
        for k2 in range(b - k1):
            if 0 < k1 + k2 < b:
                yield k1, k2


# --- alternation ---------------------------------------------------------

@dataclass(frozen=True)
class AlternatingSpec:
    """
    Interleaving of the even and the odd step-2 subfamily on the window
    [m, n]. Descending element i has degree m+i and minimum degree
    m + (i mod 2); ascending element i has minimum degree m+i and degree
    n or n-1, whichever shares its parity.
    """

    orientation: Orientation
    m: int
    n: int

    def __post_init__(self):
        if not 0 <= self.m <= self.n:
            raise WindowError(f"alternating window needs 0 <= m <= n, got m={self.m}, n={self.n}")

    @property
    def dim(self) -> int:
        return self.n - self.m + 1

    @property
    def equal_parity(self) -> bool:
        return (self.n - self.m) % 2 == 0

    def element_degrees(self, i: int) -> Tuple[int, int]:
        """(degree, minimum degree) of element i"""
        if self.orientation is Orientation.DESC:
            return self.m + i, self.m + i % 2
        low = self.m + i
        return (self.n if (self.n - low) % 2 == 0 else self.n - 1), low

    def classes(self) -> List[Tuple[int, int, int]]:
        """(offset p, sub-window low, sub-window top) for each non-empty parity class"""
        result = []
        for p in (0, 1):
            low = self.m + p
            if low > self.n:
                continue
            top = self.n if (self.n - low) % 2 == 0 else self.n - 1
            result.append((p, low, top))
        return result


@dataclass(frozen=True)
class SuperposedSpec:
    """Sum of adjacent elements of an alternating basis; sign -1 subtracts the neighbour"""

    alternating: AlternatingSpec
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise WindowError(f"superposition sign must be +1 or -1, got {self.sign}")

    def neighbour(self, j: int) -> Optional[int]:
        """Index of the alternating element added to element j"""
        if self.alternating.orientation is Orientation.DESC:
            return j - 1 if j > 0 else None
        return j + 1 if j < self.alternating.dim - 1 else None


def _scatter(spec: AlternatingSpec, cf: CoeffFn, shape: Shape, domain_basis=None, range_basis=None) -> CobMatrix:
    dim = spec.dim
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    kind = MatrixKind(spec.orientation, spec.orientation, True)
    for p, low, top in spec.classes():
        block = build_matrix(kind, cf, top, low)
        for a in range(block.dim):
            for b in range(block.dim):
                rows[p + 2 * a][p + 2 * b] = block.entries[a][b]
    return CobMatrix.from_rows(rows, shape, domain_basis=domain_basis, range_basis=range_basis)


def build_alternating_matrix(spec: AlternatingSpec, cf: CoeffFn, domain_basis=None, range_basis=None) -> CobMatrix:
    """Triangular matrix of an alternating basis built from a parity-definite coefficient function"""
    if cf.step != 2:
        raise KindError(f"{cf.name} has no definite parity")
    shape = Shape.ALT_UPPER if spec.orientation is Orientation.DESC else Shape.ALT_LOWER
    return _scatter(spec, cf, shape, domain_basis, range_basis)


def invert_alternating(m: CobMatrix, cf_inverse: CoeffFn, spec: Optional[AlternatingSpec] = None) -> CobMatrix:
    """Inverse laid out like m with the inverse coefficient function, checked by the identity product"""
    if m.shape not in (Shape.ALT_UPPER, Shape.ALT_LOWER):
        raise ShapeError(f"expected an alternating matrix, got {m.shape.value}")
    if spec is None:
        basis = m.domain_basis if m.domain_basis is not None else m.range_basis
        if basis is None:
            raise InverseMismatch("alternating layout unknown; pass the AlternatingSpec")
        spec = AlternatingSpec(basis.orientation, basis.m, basis.n)
    if spec.dim != m.dim:
        raise InverseMismatch(f"layout has {spec.dim} elements, matrix has {m.dim}")
    inverse = _scatter(spec, cf_inverse, m.shape, m.range_basis, m.domain_basis)
    if not matmul(m, inverse).is_identity():
        raise InverseMismatch(f"{cf_inverse.name} does not invert the given matrix")
    return inverse


def alternating_cf(parity_cf: CoeffFn, orientation: Orientation) -> CoeffFn:
    """Step-1 coefficient function whose triangular matrix is the alternating matrix of parity_cf"""
    if parity_cf.step != 2:
        raise KindError(f"{parity_cf.name} has no definite parity")

    if orientation is Orientation.ASC:
        def alpha(n: int, l: int, k: int) -> Fraction:
            if (n - l) % 2 == 0 and k % 2 == 0:
                return parity_cf.get(n, l, k // 2)
            if (n - l) % 2 == 1 and k % 2 == 1:
                return parity_cf.get(n - 1, l, (k - 1) // 2)
            return Fraction(0)
    else:
        def alpha(top: int, m: int, k: int) -> Fraction:
            if k % 2:
                return Fraction(0)
            return parity_cf.get(top, m + (top - m) % 2, k // 2)

    return CoeffFn(f"alt({parity_cf.name})", parity_cf.family, parity_cf.direction, 1, alpha)


def compose_alternating(
    kind: MatrixKind,
    cf1: CoeffFn,
    cf2: CoeffFn,
    vr_alt: bool = False,
    rt_alt: bool = False,
    bound: Optional[int] = None,
) -> CoeffFn:
    """
    Ascending composition that skips summands known to vanish when the
    range (vr_alt) or the domain (rt_alt) basis is alternating. Every
    other kind falls back to compose_cf.
    """
    if kind.mixed or kind.parity or kind.domain is not Orientation.ASC:
        return compose_cf(kind, cf1, cf2, bound)
    if cf1.step != 1 or cf2.step != 1:
        raise KindError("alternating composition works on step-1 coefficient functions")

    def alpha(n: int, l: int, k: int) -> Fraction:
        span = n - l - k
        if vr_alt and rt_alt and span % 2:
            return Fraction(0)
        total = Fraction(0)
        for v in range(span + 1):
            if vr_alt and (span - v) % 2:
                continue
            if rt_alt and v % 2:
                continue
            total += cf1.get(n, l + v, k) * cf2.get(n, l, n - l - v)
        return total

    return CoeffFn(f"alt({cf1.name})*({cf2.name})", cf1.family, Direction.COMPOSED, 1, alpha)


# --- superposition -------------------------------------------------------

def _descending(m: CobMatrix) -> bool:
    side = m.side()
    if side is None:
        raise ShapeError(f"expected a triangular matrix, got {m.shape.value}")
    return side == "upper"


def superpose_matrix(m_alt: CobMatrix, sign: int = 1, domain_basis=None) -> CobMatrix:
    """
    Column operations turning an alternating matrix into the matrix of its
    superposed basis: d_j = c_j + sign*c_(j-1) for descending and
    d_j = c_j + sign*c_(j+1) for ascending.
    """
    if m_alt.shape not in (Shape.ALT_UPPER, Shape.ALT_LOWER):
        raise ShapeError(f"superposition needs an alternating matrix, got {m_alt.shape.value}")
    if sign not in (1, -1):
        raise WindowError(f"superposition sign must be +1 or -1, got {sign}")
    dim = m_alt.dim
    desc = _descending(m_alt)
    columns = [m_alt.column(j) for j in range(dim)]
    result = []
    for j in range(dim):
        other = j - 1 if desc else j + 1
        if 0 <= other < dim:
            result.append([c + sign * o for c, o in zip(columns[j], columns[other])])
        else:
            result.append(list(columns[j]))
    rows = [[result[j][i] for j in range(dim)] for i in range(dim)]
    shape = Shape.UPPER if desc else Shape.LOWER
    return CobMatrix.from_rows(rows, shape, domain_basis=domain_basis, range_basis=m_alt.range_basis)


def alternate_from_superposed(m_sup: CobMatrix, sign: int = 1, domain_basis=None) -> CobMatrix:
    """Undo superpose_matrix: c_0 = d_0, c_j = d_j - sign*c_(j-1) (mirrored for ascending)"""
    if sign not in (1, -1):
        raise WindowError(f"superposition sign must be +1 or -1, got {sign}")
    dim = m_sup.dim
    desc = _descending(m_sup)
    columns: List[Optional[List[Fraction]]] = [None] * dim
    order = range(dim) if desc else range(dim - 1, -1, -1)
    for j in order:
        d = list(m_sup.column(j))
        other = j - 1 if desc else j + 1
        if 0 <= other < dim:
            d = [x - sign * y for x, y in zip(d, columns[other])]
        columns[j] = d
    rows = [[columns[j][i] for j in range(dim)] for i in range(dim)]
    shape = Shape.ALT_UPPER if desc else Shape.ALT_LOWER
    return CobMatrix.from_rows(rows, prefer=shape, domain_basis=domain_basis, range_basis=m_sup.range_basis)


# Superposition does not respect products: S(M)S(N) != S(MN) for these
NON_FUNCTOR_M = ((1, 0, 0), (0, 2, 0), (4, 0, 3))
NON_FUNCTOR_N = ((2, 0, 0), (0, 2, 0), (5, 0, 2))


def superposition_counterexample() -> Tuple[CobMatrix, CobMatrix]:
    """(S(M)S(N), S(MN)) for the lower alternating pair above"""
    m = CobMatrix.from_rows(NON_FUNCTOR_M, Shape.ALT_LOWER)
    n = CobMatrix.from_rows(NON_FUNCTOR_N, Shape.ALT_LOWER)
    product_of_images = matmul(superpose_matrix(m), superpose_matrix(n))
    image_of_product = superpose_matrix(matmul(m, n))
    return product_of_images, image_of_product
