from fractions import Fraction

import pytest

from models import registry
from models.families import Family, Orientation, classical_poly, to_monomial_cf
from models.matrices import invert_triangular, matmul
from models.registry import (
    BasisRegistry,
    BasisSpec,
    basis_polynomials,
    cob,
    convert,
    convert_parts,
    from_hub,
    reconstruct,
    to_hub,
    verify_category,
)
from utils.errors import (
    BasisError,
    InverseMismatch,
    KindError,
    LinearDependenceError,
    ParityMismatch,
    SpanError,
    WindowError,
    ZeroPolynomialError,
)
from utils.exact import Polynomial


def spec(family, orientation=Orientation.DESC, m=0, n=4, **extra) -> BasisSpec:
    return BasisSpec.create(family=family, orientation=orientation, m=m, n=n, **extra)


def custom_basis() -> BasisSpec:
    # {1, 1 + x}
    return BasisSpec.create(family=None, n=1, polynomials=(Polynomial({0: 1}), Polynomial({0: 1, 1: 1})))


def test_spec_defaults_and_description() -> None:
    zernike = spec(Family.ZERNIKE, m=1, n=7)
    assert zernike.step == 2 and zernike.dimension == 4
    assert zernike.describe() == "zernike:desc[1..7 step 2]"
    assert zernike.hub().describe() == "monomial[1..7 step 2]"
    alt = spec(Family.CHEBYSHEV_T, Orientation.ASC, n=3, alternating=True)
    assert alt.step == 1 and alt.describe() == "chebyshev_t:asc:alt[0..3]"
    assert spec(Family.CHEBYSHEV_U, n=3, superposed=True, sign=-1).describe() == "chebyshev_u:desc:sup:neg[0..3]"
    assert spec(Family.LAGUERRE, Orientation.ASC, m=3, n=6, shift=4).describe() == "laguerre:asc@10[3..6]"


@pytest.mark.parametrize(
    "fields,error",
    [
        ({"family": Family.ZERNIKE, "m": 0, "n": 5}, ParityMismatch),
        ({"family": Family.BERNSTEIN, "n": 3, "alternating": True}, KindError),
        ({"family": Family.BERNSTEIN, "m": 4, "n": 3}, WindowError),
        ({"family": Family.BERNSTEIN, "n": 3, "sign": -1}, BasisError),
        ({"family": Family.BERNSTEIN, "n": 3, "shift": 2}, KindError),
        ({"family": Family.CHEBYSHEV_T, "n": 4, "shift": 1}, ParityMismatch),
        ({"family": None, "n": 1}, BasisError),
    ],
)
def test_invalid_specs(fields, error) -> None:
    with pytest.raises(error):
        BasisSpec.create(**fields)


def test_custom_basis_validation() -> None:
    basis = custom_basis()
    assert to_hub(basis).entries == ((1, 1), (0, 1))
    assert convert(Polynomial.monomial(1), basis).coords == (-1, 1)
    x = Polynomial.monomial(1)
    with pytest.raises(LinearDependenceError):
        BasisSpec.create(family=None, n=1, polynomials=(x, x))
    with pytest.raises(LinearDependenceError):
        BasisSpec.create(family=None, n=1, polynomials=(Polynomial.zero(), x))
    with pytest.raises(SpanError):
        BasisSpec.create(family=None, n=2, polynomials=(Polynomial.monomial(0), x))
    with pytest.raises(BasisError):
        BasisSpec.create(family=None, n=1, polynomials=(x, Polynomial.monomial(0)))


def test_basis_polynomials() -> None:
    assert basis_polynomials(spec(Family.MONOMIAL, m=1, n=3)) == tuple(Polynomial.monomial(d) for d in (1, 2, 3))
    sup = basis_polynomials(spec(Family.CHEBYSHEV_U, m=0, n=2, superposed=True, sign=-1))
    # U_n - U_(n-1) is Chebyshev V
    assert sup[2] == Polynomial({2: 4, 1: -2, 0: -1})
    truncated = basis_polynomials(spec(Family.LAGUERRE, Orientation.ASC, m=3, n=6, shift=4))
    assert truncated[3] == Polynomial({6: Fraction(7, 24)})


@pytest.mark.parametrize(
    "family,orientation,m,n",
    [
        (Family.BERNSTEIN, Orientation.ASC, 2, 6),
        (Family.ZERNIKE, Orientation.DESC, 1, 9),
        (Family.HERMITE, Orientation.ASC, 0, 8),
        (Family.LEGENDRE, Orientation.DESC, 0, 6),
        (Family.SHIFTED_CHEBYSHEV_U, Orientation.ASC, 0, 5),
        (Family.CHEBYSHEV_V, Orientation.DESC, 1, 5),
    ],
)
def test_hub_matrices_are_inverse(family, orientation, m, n) -> None:
    basis = spec(family, orientation, m, n)
    assert matmul(from_hub(basis), to_hub(basis)).is_identity()
    assert matmul(to_hub(basis), from_hub(basis)).is_identity()


def test_cob_is_a_groupoid() -> None:
    a = spec(Family.BERNSTEIN, n=5)
    b = spec(Family.LAGUERRE, n=5)
    c = spec(Family.SHIFTED_LEGENDRE, n=5)
    assert cob(a, a).is_identity()
    assert matmul(cob(b, a), cob(a, b)).is_identity()
    assert matmul(cob(b, c), cob(a, b)).same_entries(cob(a, c))


def test_cob_rejects_mismatched_windows_and_routes() -> None:
    with pytest.raises(SpanError):
        cob(spec(Family.BERNSTEIN, n=4), spec(Family.LAGUERRE, n=5))
    with pytest.raises(KindError):
        cob(spec(Family.BERNSTEIN), spec(Family.LAGUERRE), route="shortest")
    with pytest.raises(KindError):
        alt = spec(Family.ZERNIKE, n=4, alternating=True)
        cob(alt, spec(Family.BERNSTEIN), route="compose")


@pytest.mark.parametrize(
    "source,target",
    [
        (Orientation.DESC, Orientation.DESC),
        (Orientation.ASC, Orientation.ASC),
        (Orientation.DESC, Orientation.ASC),
        (Orientation.ASC, Orientation.DESC),
    ],
)
def test_compose_route_matches_hub(source, target) -> None:
    a = spec(Family.SHIFTED_LEGENDRE, source, 1, 6)
    b = spec(Family.BERNSTEIN, target, 1, 6)
    assert cob(a, b, route="compose").same_entries(cob(a, b))
    z = spec(Family.ZERNIKE, source, 1, 7)
    t = spec(Family.CHEBYSHEV_T, target, 1, 7)
    assert cob(z, t, route="compose").same_entries(cob(z, t))


def test_convert_is_linear() -> None:
    basis = spec(Family.LAGUERRE, n=4)
    p = Polynomial.parse("x^4 - 2x + 3")
    q = Polynomial.parse("5x^3 + x^2")
    total = convert(p + q, basis).coords
    assert total == tuple(a + b for a, b in zip(convert(p, basis).coords, convert(q, basis).coords))
    scaled = convert(p.scale(Fraction(-2, 3)), basis).coords
    assert scaled == tuple(Fraction(-2, 3) * a for a in convert(p, basis).coords)
    assert reconstruct(convert(p, basis)) == p


def test_convert_errors(sample_polynomial) -> None:
    with pytest.raises(ZeroPolynomialError):
        convert(Polynomial.zero(), spec(Family.BERNSTEIN))
    with pytest.raises(SpanError):
        convert(Polynomial.monomial(5), spec(Family.BERNSTEIN, n=4))
    with pytest.raises(SpanError):
        convert(Polynomial.monomial(3), spec(Family.ZERNIKE, n=4))
    zernike = spec(Family.ZERNIKE, m=2, n=8)
    with pytest.raises(SpanError):
        convert_parts(sample_polynomial, zernike, split_parity=False)


def test_convert_parts_splits_by_parity(sample_polynomial) -> None:
    parts = convert_parts(sample_polynomial, spec(Family.ZERNIKE, m=2, n=8))
    assert [p.basis.describe() for p in parts] == ["zernike:desc[2..4 step 2]", "zernike:desc[5..7 step 2]"]
    assert parts[0].coords == (Fraction(27, 4), Fraction(5, 4))
    assert parts[1].coords == (Fraction(12, 7), Fraction(16, 7))
    assert reconstruct(parts[0]) + reconstruct(parts[1]) == sample_polynomial
    whole = convert_parts(sample_polynomial, spec(Family.BERNSTEIN, m=2, n=7))
    assert len(whole) == 1


def test_verify_category() -> None:
    single = verify_category([spec(Family.BERNSTEIN, n=3)])
    assert len(single.checks) == 1 and single.passed
    bases = [
        spec(Family.MONOMIAL, m=1, n=4),
        spec(Family.BERNSTEIN, m=1, n=4),
        spec(Family.LAGUERRE, Orientation.DESC, m=1, n=4),
        spec(Family.CHEBYSHEV_V, Orientation.DESC, m=1, n=4),
    ]
    report = verify_category(bases)
    assert report.passed, [c.name for c in report.failures()]
    assert any(c.name.startswith("functor tr") for c in report.checks)


def test_verify_category_on_a_parity_window() -> None:
    bases = [
        spec(Family.MONOMIAL, m=3, n=9, step=2),
        spec(Family.ZERNIKE, Orientation.DESC, m=3, n=9),
        spec(Family.ZERNIKE, Orientation.ASC, m=3, n=9),
        spec(Family.CHEBYSHEV_T, Orientation.DESC, m=3, n=9),
    ]
    report = verify_category(bases, sample=8)
    assert report.passed, [c.name for c in report.failures()]


def test_basis_registry() -> None:
    registry = BasisRegistry()
    bern = registry.register(spec(Family.BERNSTEIN, n=3))
    lag = registry.register(spec(Family.LAGUERRE, n=3))
    assert registry.ids() == [bern, lag]
    assert registry.cob(bern, lag).same_entries(cob(spec(Family.BERNSTEIN, n=3), spec(Family.LAGUERRE, n=3)))
    assert registry.convert(Polynomial.monomial(3), lag).coords == (6, -18, 18, -6)
    assert registry.verify().passed
    with pytest.raises(BasisError):
        registry.get(99)


def test_descending_t_list_needs_its_first_element() -> None:
    truncated = [classical_poly(Family.CHEBYSHEV_T, k).truncate(k, 1) for k in (1, 3, 5, 7)]
    with pytest.raises(SpanError):
        BasisSpec.create(family=None, m=1, n=7, step=2, polynomials=tuple(truncated[1:]))
    registry = BasisRegistry()
    handle = registry.register(BasisSpec.create(family=None, m=1, n=7, step=2, polynomials=tuple(truncated)))
    assert registry.cob(handle, handle).is_identity()
    named = spec(Family.CHEBYSHEV_T, m=1, n=7)
    assert to_hub(registry.get(handle)).same_entries(to_hub(named))


@pytest.mark.parametrize("orientation", list(Orientation))
@pytest.mark.parametrize("family", [f for f in Family if f.definite_parity])
def test_alternating_hub_inverse(family, orientation) -> None:
    alt = spec(family, orientation, n=5, alternating=True)
    assert matmul(from_hub(alt), to_hub(alt)).is_identity()
    assert from_hub(alt).same_entries(invert_triangular(to_hub(alt)))


def test_alternating_inverse_mismatch_is_raised(monkeypatch) -> None:
    alt = spec(Family.ZERNIKE, n=5, alternating=True)
    from_hub.cache_clear()
    monkeypatch.setattr(registry, "from_monomial_cf", lambda family, orientation, step=None: to_monomial_cf(family))
    try:
        with pytest.raises(InverseMismatch):
            from_hub(alt)
    finally:
        from_hub.cache_clear()
