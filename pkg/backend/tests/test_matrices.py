import random
from fractions import Fraction

import pytest

from models.families import (
    Orientation,
    cf_bernstein_to_monomial,
    cf_monomial_to_bernstein_desc,
    cf_zernike_to_monomial,
)
from models.matrices import (
    CobMatrix,
    MatrixKind,
    Shape,
    band_inverse,
    build_matrix,
    build_mixed_matrix,
    compose_cf,
    detect_shape,
    element_args,
    gauss_inverse,
    gauss_solve,
    identity,
    invert_triangular,
    matmul,
)
from utils.errors import (
    BandPreconditionError,
    DimensionMismatch,
    KindError,
    ParityMismatch,
    ShapeError,
    SingularMatrixError,
)

DD = MatrixKind(Orientation.DESC, Orientation.DESC, False)
DA = MatrixKind(Orientation.DESC, Orientation.ASC, False)


def test_eight_kinds() -> None:
    kinds = MatrixKind.all()
    assert len(kinds) == 8
    assert {k.code for k in kinds} == {"DD", "DA", "AD", "AA", "DDp", "DAp", "ADp", "AAp"}
    assert DA.mixed and not DD.mixed
    assert MatrixKind(Orientation.ASC, Orientation.ASC, True).step == 2


def test_element_args_layout() -> None:
    assert element_args(DD, 5, 1, 0, 2) == (3, 1, 2)
    asc_parity = MatrixKind(Orientation.ASC, Orientation.ASC, True)
    assert element_args(asc_parity, 9, 3, 3, 0) == (9, 3, 0)


def test_shape_checked_on_construction() -> None:
    with pytest.raises(ShapeError):
        CobMatrix.from_rows([[1, 0], [2, 1]], Shape.UPPER)
    with pytest.raises(DimensionMismatch):
        CobMatrix.from_rows([[1, 0]])
    with pytest.raises(ShapeError):
        CobMatrix.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, 1]], Shape.ALT_UPPER)
    assert detect_shape([[1, 2], [0, 1]]) is Shape.UPPER
    assert detect_shape([[1, 0], [2, 1]]) is Shape.LOWER
    assert detect_shape([[1, 2], [3, 1]]) is Shape.FULL
    assert detect_shape([[1, 0], [0, 1]], prefer=Shape.ALT_LOWER) is Shape.ALT_LOWER


def test_accessors() -> None:
    m = CobMatrix.from_rows([[1, "1/2"], [0, 3]])
    assert m.shape is Shape.UPPER
    assert m[0, 1] == Fraction(1, 2)
    assert m.row(1) == (0, 3)
    assert m.column(1) == (Fraction(1, 2), 3)
    assert m.diagonal() == (1, 3)
    assert m.side() == "upper"
    assert identity(3).is_identity()
    with pytest.raises(DimensionMismatch):
        identity(0)


def test_build_matrix_checks_kind() -> None:
    cf = cf_bernstein_to_monomial()
    m = build_matrix(DD, cf, 3, 0)
    assert m.shape is Shape.UPPER
    # columns are b_0^0 .. b_0^3
    assert m.column(3) == (1, -3, 3, -1)
    with pytest.raises(KindError):
        build_matrix(DA, cf, 3, 0)
    with pytest.raises(KindError):
        build_mixed_matrix(DD, cf, 3, 0)
    with pytest.raises(KindError):
        build_matrix(DD, cf_zernike_to_monomial(), 4, 0)
    with pytest.raises(ParityMismatch):
        build_matrix(MatrixKind(Orientation.DESC, Orientation.DESC, True), cf_zernike_to_monomial(), 5, 0)


def test_compose_cf_of_inverse_pair_is_identity() -> None:
    composed = compose_cf(DD, cf_monomial_to_bernstein_desc(), cf_bernstein_to_monomial())
    assert build_matrix(DD, composed, 6, 1).is_identity()
    with pytest.raises(KindError):
        compose_cf(DA, cf_monomial_to_bernstein_desc(), cf_bernstein_to_monomial())


def test_matmul_and_shapes() -> None:
    a = CobMatrix.from_rows([[1, 2], [0, 1]])
    b = CobMatrix.from_rows([[3, 0], [0, 2]], Shape.UPPER)
    product = matmul(a, b)
    assert product.entries == ((3, 4), (0, 2))
    assert product.shape is Shape.UPPER
    with pytest.raises(DimensionMismatch):
        matmul(a, identity(3))


@pytest.mark.parametrize("dim", range(1, 11))
def test_matmul_is_associative(dim) -> None:
    rng = random.Random(dim)

    def random_matrix() -> CobMatrix:
        return CobMatrix.from_rows(
            [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(dim)] for _ in range(dim)]
        )

    for _ in range(2):
        a, b, c = random_matrix(), random_matrix(), random_matrix()
        assert matmul(matmul(a, b), c).entries == matmul(a, matmul(b, c)).entries


def test_basis_metadata_must_line_up() -> None:
    a = identity(2).with_bases("x", "y")
    b = identity(2).with_bases("y", "z")
    assert matmul(b, a).domain_basis == "x"
    with pytest.raises(DimensionMismatch):
        matmul(a, b)


def test_invert_triangular() -> None:
    m = CobMatrix.from_rows([[2, 1], [0, 4]])
    assert invert_triangular(m).entries == ((Fraction(1, 2), Fraction(-1, 8)), (0, Fraction(1, 4)))
    lower = CobMatrix.from_rows([[1, 0, 0], [2, 1, 0], [3, 4, 1]])
    assert matmul(lower, invert_triangular(lower)).is_identity()
    with pytest.raises(ShapeError):
        invert_triangular(CobMatrix.from_rows([[1, 2], [3, 4]]))
    with pytest.raises(SingularMatrixError):
        invert_triangular(CobMatrix.from_rows([[0, 1], [0, 1]], Shape.UPPER))


def test_band_inverse() -> None:
    m = CobMatrix.from_rows([[2, 2, 2], [0, 3, 3], [0, 0, 5]])
    inverse = band_inverse(m)
    assert inverse.shape is Shape.BAND
    assert inverse.entries == (
        (Fraction(1, 2), Fraction(-1, 3), 0),
        (0, Fraction(1, 3), Fraction(-1, 5)),
        (0, 0, Fraction(1, 5)),
    )
    assert inverse.same_entries(invert_triangular(m))
    lower = CobMatrix.from_rows([[2, 0], [3, 3]])
    assert band_inverse(lower).same_entries(invert_triangular(lower))
    with pytest.raises(BandPreconditionError):
        band_inverse(CobMatrix.from_rows([[2, 1], [0, 3]]))
    with pytest.raises(BandPreconditionError):
        band_inverse(CobMatrix.from_rows([[1, 2], [3, 4]]))


def test_gauss_elimination() -> None:
    swap = CobMatrix.from_rows([[0, 1], [1, 0]])
    assert gauss_inverse(swap).same_entries(swap)
    assert gauss_solve([[2, 1], [1, 3]], [[3], [5]]) == [[Fraction(4, 5)], [Fraction(7, 5)]]
    with pytest.raises(SingularMatrixError):
        gauss_solve([[1, 2], [2, 4]], [[1], [2]])
