"""
Change-of-Basis Matrices
Builds the eight triangular and mixed matrix kinds from coefficient functions, composes coefficient functions and does exact products and inverses
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from models.families import CoeffFn, Direction, Orientation
from utils.errors import (
    BandPreconditionError,
    DimensionMismatch,
    KindError,
    ParityMismatch,
    ShapeError,
    SingularMatrixError,
    WindowError,
)
from utils.exact import Scalar, as_rational

logger = logging.getLogger(__name__)

Rows = Tuple[Tuple[Fraction, ...], ...]


class Shape(str, Enum):
    UPPER = "upper"
    LOWER = "lower"
    FULL = "full"
    ALT_UPPER = "alt_upper"
    ALT_LOWER = "alt_lower"
    BAND = "band"


@dataclass(frozen=True)
class MatrixKind:
    """Orientation of the domain basis, of the range basis, and whether both have definite parity"""

    domain: Orientation
    range: Orientation
    parity: bool

    @property
    def mixed(self) -> bool:
        return self.domain is not self.range

    @property
    def step(self) -> int:
        return 2 if self.parity else 1

    @property
    def code(self) -> str:
        letters = {Orientation.DESC: "D", Orientation.ASC: "A"}
        return letters[self.domain] + letters[self.range] + ("p" if self.parity else "")

    @classmethod
    def all(cls) -> List["MatrixKind"]:
        return [
            cls(domain, rng, parity)
            for parity in (False, True)
            for domain in (Orientation.DESC, Orientation.ASC)
            for rng in (Orientation.DESC, Orientation.ASC)
        ]


def _is_zero_below(rows: Sequence[Sequence[Fraction]]) -> bool:
    return all(rows[i][j] == 0 for i in range(len(rows)) for j in range(i))


def _is_zero_above(rows: Sequence[Sequence[Fraction]]) -> bool:
    return all(rows[i][j] == 0 for i in range(len(rows)) for j in range(i + 1, len(rows)))


def _is_alternating(rows: Sequence[Sequence[Fraction]]) -> bool:
    return all(
        rows[i][j] == 0 for i in range(len(rows)) for j in range(len(rows)) if (i - j) % 2
    )


def _band_side(rows: Sequence[Sequence[Fraction]]) -> Optional[str]:
    dim = len(rows)
    allowed_upper = all(
        rows[i][j] == 0 for i in range(dim) for j in range(dim) if j not in (i, i + 1)
    )
    if allowed_upper:
        return "upper"
    allowed_lower = all(
        rows[i][j] == 0 for i in range(dim) for j in range(dim) if j not in (i, i - 1)
    )
    return "lower" if allowed_lower else None


def _shape_holds(shape: Shape, rows: Sequence[Sequence[Fraction]]) -> bool:
    if shape is Shape.FULL:
        return True
    if shape is Shape.UPPER:
        return _is_zero_below(rows)
    if shape is Shape.LOWER:
        return _is_zero_above(rows)
    if shape is Shape.ALT_UPPER:
        return _is_zero_below(rows) and _is_alternating(rows)
    if shape is Shape.ALT_LOWER:
        return _is_zero_above(rows) and _is_alternating(rows)
    return _band_side(rows) is not None


def detect_shape(rows: Sequence[Sequence[Fraction]], prefer: Optional[Shape] = None) -> Shape:
    """Tightest triangular tag the entries satisfy, honouring a preferred tag when it holds"""
    if prefer is not None and _shape_holds(prefer, rows):
        return prefer
    if _is_zero_below(rows):
        return Shape.UPPER
    if _is_zero_above(rows):
        return Shape.LOWER
    return Shape.FULL


@dataclass(frozen=True)
class CobMatrix:
    """
    Dense exact square matrix mapping coordinates in `domain_basis` to
    coordinates in `range_basis`. Column j is the coordinate vector of the
    j-th domain basis element. The shape tag is checked against the
    structural zeros on construction.
    """

    entries: Rows
    shape: Shape = Shape.FULL
    domain_basis: Optional[Any] = None
    range_basis: Optional[Any] = None

    def __post_init__(self):
        dim = len(self.entries)
        if dim == 0 or any(len(row) != dim for row in self.entries):
            raise DimensionMismatch("change-of-basis matrices are square and non-empty")
        if not _shape_holds(self.shape, self.entries):
            raise ShapeError(f"entries violate the {self.shape.value} structure")

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Scalar]],
        shape: Optional[Shape] = None,
        prefer: Optional[Shape] = None,
        domain_basis: Optional[Any] = None,
        range_basis: Optional[Any] = None,
    ) -> "CobMatrix":
        entries = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if shape is None:
            shape = detect_shape(entries, prefer) if entries else Shape.FULL
        return cls(entries, shape, domain_basis, range_basis)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def diagonal(self) -> Tuple[Fraction, ...]:
        return tuple(self.entries[i][i] for i in range(self.dim))

    def same_entries(self, other: "CobMatrix") -> bool:
        return self.entries == other.entries

    def with_bases(self, domain_basis: Optional[Any], range_basis: Optional[Any]) -> "CobMatrix":
        return replace(self, domain_basis=domain_basis, range_basis=range_basis)

    def with_shape(self, shape: Shape) -> "CobMatrix":
        return replace(self, shape=shape)

    def side(self) -> Optional[str]:
        """'upper' or 'lower' for triangular tags, None for full"""
        if self.shape in (Shape.UPPER, Shape.ALT_UPPER):
            return "upper"
        if self.shape in (Shape.LOWER, Shape.ALT_LOWER):
            return "lower"
        if self.shape is Shape.BAND:
            return _band_side(self.entries)
        return None

    def is_identity(self) -> bool:
        return all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(self.dim)
            for j in range(self.dim)
        )


def identity(dim: int, basis: Optional[Any] = None, shape: Shape = Shape.UPPER) -> CobMatrix:
    if dim < 1:
        raise DimensionMismatch(f"dimension must be positive, got {dim}")
    rows = tuple(tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim))
    return CobMatrix(rows, shape, basis, basis)


# --- element layouts -----------------------------------------------------

def element_args(kind: MatrixKind, n: int, m: int, i: int, j: int) -> Tuple[int, int, int]:
    """Arguments of the coefficient function that gives entry (i, j) of a kind's matrix"""
    half = (n - m) // 2
    desc, asc = Orientation.DESC, Orientation.ASC
    if not kind.parity:
        if (kind.domain, kind.range) == (desc, desc):
            return m + j, m, j - i
        if (kind.domain, kind.range) in ((asc, asc), (desc, asc)):
            return n, m + j, n - m - i
        return m + j, m, n - m - i
    if (kind.domain, kind.range) == (desc, desc):
        return m + 2 * j, m, j - i
    if (kind.domain, kind.range) in ((asc, asc), (desc, asc)):
        return n, m + 2 * j, half - i
    return m + 2 * j, m, half - i


def _check_window(kind: MatrixKind, n: int, m: int) -> int:
    if not 0 <= m <= n:
        raise WindowError(f"window needs 0 <= m <= n, got m={m}, n={n}")
    if kind.parity and (n - m) % 2:
        raise ParityMismatch(f"parity kinds need n and m of equal parity, got m={m}, n={n}")
    return (n - m) // kind.step + 1


def _fill(kind: MatrixKind, cf: CoeffFn, n: int, m: int, dim: int) -> Rows:
    return tuple(
        tuple(cf.get(*element_args(kind, n, m, i, j)) for j in range(dim)) for i in range(dim)
    )


def build_matrix(
    kind: MatrixKind,
    cf: CoeffFn,
    n: int,
    m: int,
    domain_basis: Optional[Any] = None,
    range_basis: Optional[Any] = None,
) -> CobMatrix:
    """Triangular matrix of a same-orientation kind; upper for descending, lower for ascending"""
    if kind.mixed:
        raise KindError(f"{kind.code} is a mixed kind, use build_mixed_matrix")
    if cf.step != kind.step:
        raise KindError(f"{cf.name} has step {cf.step} but kind {kind.code} needs {kind.step}")
    dim = _check_window(kind, n, m)
    rows = _fill(kind, cf, n, m, dim)
    if any(rows[i][i] == 0 for i in range(dim)):
        raise SingularMatrixError(f"{cf.name} gives a zero diagonal on window [{m}, {n}]")
    shape = Shape.UPPER if kind.domain is Orientation.DESC else Shape.LOWER
    return CobMatrix(rows, shape, domain_basis, range_basis)


def build_mixed_matrix(
    kind: MatrixKind,
    cf: CoeffFn,
    n: int,
    m: int,
    domain_basis: Optional[Any] = None,
    range_basis: Optional[Any] = None,
) -> CobMatrix:
    """Full matrix between a descending and an ascending basis of the same window"""
    if not kind.mixed:
        raise KindError(f"{kind.code} is not a mixed kind, use build_matrix")
    if cf.step != kind.step:
        raise KindError(f"{cf.name} has step {cf.step} but kind {kind.code} needs {kind.step}")
    dim = _check_window(kind, n, m)
    return CobMatrix(_fill(kind, cf, n, m, dim), Shape.FULL, domain_basis, range_basis)


# --- composition of coefficient functions --------------------------------

def compose_cf(kind: MatrixKind, cf1: CoeffFn, cf2: CoeffFn, bound: Optional[int] = None) -> CoeffFn:
    """
    Coefficient function of M_vr * M_rt through the monomial hub r.

    cf1 maps the monomials to v and cf2 maps t to the monomials. Mixed kinds
    need the fixed window bound: m for descending-to-ascending, n for
    ascending-to-descending.
    """
    if cf1.step != kind.step or cf2.step != kind.step:
        raise KindError(f"kind {kind.code} needs step {kind.step} on both sides")
    if kind.mixed and bound is None:
        raise KindError(f"mixed kind {kind.code} needs its window bound")

    d = kind.step
    desc, asc = Orientation.DESC, Orientation.ASC
    pair = (kind.domain, kind.range)
    domain = None

    if pair == (desc, desc):
        def evaluator(n: int, m: int, k: int) -> Fraction:
            return sum(
                (cf1.get(n - d * v, m, k - v) * cf2.get(n, m, v) for v in range(k + 1)),
                Fraction(0),
            )
    elif pair == (asc, asc):
        def evaluator(n: int, l: int, k: int) -> Fraction:
            top = (n - l) // d - k
            return sum(
                (cf1.get(n, l + d * v, k) * cf2.get(n, l, (n - l) // d - v) for v in range(top + 1)),
                Fraction(0),
            )
    elif pair == (desc, asc):
        m0 = bound

        def evaluator(n: int, l: int, k: int) -> Fraction:
            top = min((n - m0) // d - k, (l - m0) // d)
            return sum(
                (cf1.get(n, m0 + d * v, k) * cf2.get(l, m0, (l - m0) // d - v) for v in range(top + 1)),
                Fraction(0),
            )

        def domain(n: int, l: int, k: int) -> bool:
            return (
                m0 <= l <= n
                and (l - m0) % d == 0
                and (n - m0) % d == 0
                and 0 <= k <= (n - m0) // d
            )
    else:
        n0 = bound

        def evaluator(l: int, m: int, k: int) -> Fraction:
            top = min(k, (n0 - l) // d)
            return sum(
                (cf1.get(n0 - d * v, m, k - v) * cf2.get(n0, l, v) for v in range(top + 1)),
                Fraction(0),
            )

        def domain(l: int, m: int, k: int) -> bool:
            return (
                m <= l <= n0
                and (l - m) % d == 0
                and (n0 - m) % d == 0
                and 0 <= k <= (n0 - m) // d
            )

    return CoeffFn(
        f"({cf1.name})*({cf2.name})",
        cf1.family,
        Direction.COMPOSED,
        d,
        evaluator,
        domain=domain,
    )


# --- products and inverses -----------------------------------------------

def _product_shape(a: CobMatrix, b: CobMatrix) -> Optional[Shape]:
    side_a, side_b = a.side(), b.side()
    if side_a is None or side_b is None or side_a != side_b:
        return None
    alternating = {Shape.ALT_UPPER, Shape.ALT_LOWER}
    if a.shape in alternating and b.shape in alternating:
        return Shape.ALT_UPPER if side_a == "upper" else Shape.ALT_LOWER
    return Shape.UPPER if side_a == "upper" else Shape.LOWER


def matmul(a: CobMatrix, b: CobMatrix) -> CobMatrix:
    """Exact product a*b; a's domain basis must be b's range basis"""
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")
    if a.domain_basis is not None and b.range_basis is not None and a.domain_basis != b.range_basis:
        raise DimensionMismatch("left factor's domain basis is not the right factor's range basis")
    dim = a.dim
    rows = tuple(
        tuple(
            sum((a.entries[i][k] * b.entries[k][j] for k in range(dim)), Fraction(0))
            for j in range(dim)
        )
        for i in range(dim)
    )
    shape = _product_shape(a, b)
    if shape is None:
        shape = detect_shape(rows)
    return CobMatrix(rows, shape, b.domain_basis, a.range_basis)


def invert_triangular(m: CobMatrix) -> CobMatrix:
    """Exact inverse by back (upper) or forward (lower) substitution"""
    side = m.side()
    if side is None:
        raise ShapeError(f"cannot substitute through a {m.shape.value} matrix")
    dim = m.dim
    a = m.entries
    for i in range(dim):
        if a[i][i] == 0:
            raise SingularMatrixError(f"zero diagonal entry at {i}")
    inverse = [[Fraction(0)] * dim for _ in range(dim)]
    order = range(dim - 1, -1, -1) if side == "upper" else range(dim)
    for col in range(dim):
        for i in order:
            if side == "upper":
                acc = sum((a[i][k] * inverse[k][col] for k in range(i + 1, dim)), Fraction(0))
            else:
                acc = sum((a[i][k] * inverse[k][col] for k in range(i)), Fraction(0))
            inverse[i][col] = ((1 if i == col else 0) - acc) / a[i][i]
    if m.shape in (Shape.ALT_UPPER, Shape.ALT_LOWER):
        shape = m.shape
    else:
        shape = Shape.UPPER if side == "upper" else Shape.LOWER
    return CobMatrix.from_rows(inverse, shape, domain_basis=m.range_basis, range_basis=m.domain_basis)


def band_inverse(m: CobMatrix) -> CobMatrix:
    """
    Inverse of a matrix whose columns are truncations of one polynomial.
    Each row is constant inside the triangle, and the inverse has the
    reciprocal diagonal plus one adjacent diagonal of negated reciprocals.
    """
    side = m.side()
    if side is None:
        raise BandPreconditionError(f"band inverse needs a triangular matrix, got {m.shape.value}")
    dim = m.dim
    a = m.entries
    for i in range(dim):
        inside = range(i, dim) if side == "upper" else range(i + 1)
        if a[i][i] == 0:
            raise SingularMatrixError(f"zero diagonal entry at {i}")
        if any(a[i][j] != a[i][i] for j in inside):
            raise BandPreconditionError(f"row {i} is not constant inside the triangle")
    inverse = [[Fraction(0)] * dim for _ in range(dim)]
    for j in range(dim):
        inverse[j][j] = 1 / a[j][j]
        if side == "upper" and j > 0:
            inverse[j - 1][j] = -1 / a[j][j]
        if side == "lower" and j < dim - 1:
            inverse[j + 1][j] = -1 / a[j][j]
    return CobMatrix.from_rows(inverse, Shape.BAND, domain_basis=m.range_basis, range_basis=m.domain_basis)


def gauss_solve(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> List[List[Fraction]]:
    """Solve a X = b exactly by Gauss-Jordan elimination; b holds one column per right-hand side"""
    dim = len(a)
    if any(len(row) != dim for row in a) or len(b) != dim:
        raise DimensionMismatch("gauss_solve needs a square system")
    width = len(b[0]) if dim else 0
    work = [
        [as_rational(x) for x in a[i]] + [as_rational(x) for x in b[i]] for i in range(dim)
    ]
    for col in range(dim):
        pivot = next((r for r in range(col, dim) if work[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        work[col], work[pivot] = work[pivot], work[col]
        lead = work[col][col]
        work[col] = [x / lead for x in work[col]]
        for r in range(dim):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[dim:dim + width] for row in work]


def gauss_inverse(m: CobMatrix) -> CobMatrix:
    ident = [[Fraction(1 if i == j else 0) for j in range(m.dim)] for i in range(m.dim)]
    rows = gauss_solve(m.entries, ident)
    return CobMatrix.from_rows(rows, domain_basis=m.range_basis, range_basis=m.domain_basis)
