"""
Basis Registry
The change-of-basis groupoid: basis descriptions, routing through the monomial hub, polynomial conversion and the category laws
"""

import itertools
import logging
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NewType, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from models.families import (
    Family,
    Orientation,
    basis_element,
    classical_poly,
    from_monomial_cf,
    to_monomial_cf,
    truncate_cf,
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
    identity,
    invert_triangular,
    matmul,
)
from models.transforms import (
    AlternatingSpec,
    build_alternating_matrix,
    enumerate_truncations,
    invert_alternating,
    superpose_matrix,
    truncate_matrix,
)
from utils import config
from utils.errors import (
    BasisError,
    ChangeOfBasisError,
    KindError,
    LinearDependenceError,
    ParityMismatch,
    SpanError,
    WindowError,
)
from utils.exact import Polynomial

logger = logging.getLogger(__name__)

BasisId = NewType("BasisId", int)


class BasisSpec(BaseModel):
    """
    One finite polynomial basis spanning {x^m, x^(m+step), ..., x^n}.

    `family=None` marks a custom basis given by `polynomials`. `shift` makes
    a truncated classical family: descending element j is
    F_(m+j*step+shift)(x) truncated to [m, m+j*step], ascending element j is
    F_(n+shift)(x) truncated to [m+j*step, n]. Build instances with
    `BasisSpec.create`, which also checks the basis invariants.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: Optional[Family] = Family.MONOMIAL
    orientation: Orientation = Orientation.DESC
    m: int = 0
    n: int
    step: int = 0
    alternating: bool = False
    superposed: bool = False
    sign: int = 1
    shift: int = 0
    polynomials: Optional[Tuple[Polynomial, ...]] = None
    label: str = ""

    @model_validator(mode="before")
    @classmethod
    def _normalise(cls, data):
        if not isinstance(data, dict):
            return data
        data = dict(data)
        family = data.get("family", Family.MONOMIAL)
        if isinstance(family, str):
            family = Family(family)
            data["family"] = family
        if data.get("superposed"):
            data["alternating"] = True
        if family is Family.MONOMIAL:
            data["orientation"] = Orientation.DESC
        if not data.get("step"):
            if family is not None and family.definite_parity and not data.get("alternating"):
                data["step"] = 2
            else:
                data["step"] = 1
        if data.get("polynomials") is not None:
            data["polynomials"] = tuple(data["polynomials"])
        return data

    @classmethod
    def create(cls, **fields) -> "BasisSpec":
        spec = cls(**fields)
        spec.check()
        return spec

    def check(self) -> None:
        """Raise the matching domain error when the description cannot be a basis"""
        if not 0 <= self.m <= self.n:
            raise WindowError(f"window needs 0 <= m <= n, got m={self.m}, n={self.n}")
        if self.step not in (1, 2):
            raise WindowError(f"step must be 1 or 2, got {self.step}")
        if self.step == 2 and (self.n - self.m) % 2:
            raise ParityMismatch(f"step-2 window needs m and n of equal parity, got m={self.m}, n={self.n}")
        if self.sign not in (1, -1) or (self.sign == -1 and not self.superposed):
            raise BasisError("sign -1 is only meaningful for superposed bases")
        family = self.family
        if family is None:
            if self.polynomials is None:
                raise BasisError("custom bases need their polynomials")
            validate_basis_polynomials(self.polynomials, self)
            return
        if self.polynomials is not None:
            raise BasisError("polynomials are only given for custom bases")
        if self.alternating and not family.definite_parity:
            raise KindError(f"{family.value} has no definite parity to alternate")
        if family is not Family.MONOMIAL:
            wanted = 1 if self.alternating else family.step
            if self.step != wanted:
                raise KindError(f"{family.value} bases use step {wanted}, got {self.step}")
        if self.shift:
            if self.shift < 0:
                raise WindowError(f"shift must be non-negative, got {self.shift}")
            if not family.classical or self.alternating:
                raise KindError("only non-alternating classical families can be shifted")
            if self.shift % family.step:
                raise ParityMismatch(f"{family.value} needs an even shift, got {self.shift}")

    @property
    def dimension(self) -> int:
        return (self.n - self.m) // self.step + 1

    @property
    def custom(self) -> bool:
        return self.family is None

    def hub(self) -> "BasisSpec":
        """The monomial window this basis is routed through"""
        return BasisSpec(family=Family.MONOMIAL, m=self.m, n=self.n, step=self.step)

    def with_window(self, m: int, n: int) -> "BasisSpec":
        return BasisSpec.create(**{**self.model_dump(), "m": m, "n": n, "polynomials": self.polynomials})

    def truncated(self, k1: int, k2: int) -> "BasisSpec":
        """The basis a tr_{k1,k2}-truncated matrix maps from or to"""
        d = self.step
        m, n = self.m + d * k1, self.n - d * k2
        if m > n:
            raise WindowError(f"tr_{{{k1},{k2}}} leaves no elements of {self.describe()}")
        family = self.family
        plain = family is not None and not self.alternating
        if family is Family.MONOMIAL:
            return self.with_window(m, n)
        if plain and family.classical:
            shift = self.shift + (d * k2 if self.orientation is Orientation.ASC else 0)
            return BasisSpec.create(**{**self.model_dump(), "m": m, "n": n, "shift": shift})
        if plain and self.orientation is Orientation.DESC and k1 == 0:
            return self.with_window(m, n)
        if plain and self.orientation is Orientation.ASC and k2 == 0:
            return self.with_window(m, n)
        kept = basis_polynomials(self)[k1:self.dimension - k2]
        return BasisSpec.create(
            family=None,
            orientation=self.orientation,
            m=m,
            n=n,
            step=d,
            polynomials=tuple(_clip(p, m, n) for p in kept),
            label=f"tr{k1},{k2}({self.describe()})",
        )

    def describe(self) -> str:
        if self.custom:
            head = self.label or "custom"
        else:
            head = self.family.value
            if self.family is not Family.MONOMIAL:
                head += f":{self.orientation.value}"
            if self.alternating:
                head += ":sup" if self.superposed else ":alt"
            if self.sign == -1:
                head += ":neg"
            if self.shift:
                head += f"@{self.n + self.shift}"
        window = f"[{self.m}..{self.n}" + (f" step {self.step}]" if self.step == 2 else "]")
        return head + window


class CoordVector(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    basis: BasisSpec
    coords: Tuple[Fraction, ...]


class LawCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class LawReport(BaseModel):
    checks: List[LawCheck] = []

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[LawCheck]:
        return [check for check in self.checks if not check.passed]


def _clip(p: Polynomial, low: int, high: int) -> Polynomial:
    return Polynomial({d: c for d, c in p if low <= d <= high})


# --- basis polynomials ---------------------------------------------------

def validate_basis_polynomials(polys: Sequence[Polynomial], spec: BasisSpec) -> None:
    """Distinct degrees (descending) or minimum degrees (ascending) inside the window"""
    if len(polys) != spec.dimension:
        raise SpanError(
            f"{len(polys)} polynomials cannot span the {spec.dimension} monomials of [{spec.m}..{spec.n}]"
        )
    keys = []
    for j, p in enumerate(polys):
        if p.is_zero():
            raise LinearDependenceError(f"element {j} is the zero polynomial")
        for degree, _ in p:
            if not spec.m <= degree <= spec.n or (degree - spec.m) % spec.step:
                raise SpanError(f"element {j} has a term of degree {degree} outside the window")
        keys.append(p.degree() if spec.orientation is Orientation.DESC else p.min_degree())
    if len(set(keys)) != len(keys):
        word = "degree" if spec.orientation is Orientation.DESC else "minimum degree"
        raise LinearDependenceError(f"basis elements repeat a {word}: {keys}")
    expected = [spec.m + spec.step * j for j in range(spec.dimension)]
    if keys != expected:
        raise BasisError(f"elements must be ordered by {spec.orientation.value} degree, got {keys}")


def _alternating_spec(spec: BasisSpec) -> AlternatingSpec:
    return AlternatingSpec(spec.orientation, spec.m, spec.n)


@lru_cache(maxsize=None)
def basis_polynomials(spec: BasisSpec) -> Tuple[Polynomial, ...]:
    """Monomial expansions of the basis elements, in basis order"""
    if spec.custom:
        return spec.polynomials
    family, m, n, d = spec.family, spec.m, spec.n, spec.step
    if family is Family.MONOMIAL:
        return tuple(Polynomial.monomial(m + d * j) for j in range(spec.dimension))
    if spec.alternating:
        layout = _alternating_spec(spec)
        alt = [basis_element(family, *layout.element_degrees(i)) for i in range(layout.dim)]
        if not spec.superposed:
            return tuple(alt)
        result = []
        for j, element in enumerate(alt):
            other = j - 1 if spec.orientation is Orientation.DESC else j + 1
            if 0 <= other < len(alt):
                element = element + alt[other].scale(spec.sign)
            result.append(element)
        return tuple(result)
    if spec.orientation is Orientation.DESC:
        if family.classical:
            return tuple(
                classical_poly(family, m + d * j + spec.shift).truncate(m + d * j, m)
                if spec.shift
                else basis_element(family, m + d * j, m)
                for j in range(spec.dimension)
            )
        return tuple(basis_element(family, m + d * j, m) for j in range(spec.dimension))
    if family.classical and spec.shift:
        source = classical_poly(family, n + spec.shift)
        return tuple(source.truncate(n, m + d * j) for j in range(spec.dimension))
    return tuple(basis_element(family, n, m + d * j) for j in range(spec.dimension))


# --- hub matrices --------------------------------------------------------

def _kind(spec: BasisSpec) -> MatrixKind:
    return MatrixKind(spec.orientation, spec.orientation, spec.step == 2)


@lru_cache(maxsize=None)
def to_hub(spec: BasisSpec) -> CobMatrix:
    """Matrix from the basis to its monomial window"""
    hub = spec.hub()
    if spec.family is Family.MONOMIAL:
        return identity(spec.dimension).with_bases(spec, hub)
    if spec.custom:
        polys = spec.polynomials
        rows = [
            [polys[j].coefficient(spec.m + spec.step * i) for j in range(spec.dimension)]
            for i in range(spec.dimension)
        ]
        prefer = Shape.UPPER if spec.orientation is Orientation.DESC else Shape.LOWER
        return CobMatrix.from_rows(rows, prefer=prefer, domain_basis=spec, range_basis=hub)
    cf = to_monomial_cf(spec.family)
    if spec.alternating:
        alt = build_alternating_matrix(_alternating_spec(spec), cf, range_basis=hub)
        if spec.superposed:
            return superpose_matrix(alt, spec.sign, domain_basis=spec)
        return alt.with_bases(spec, hub)
    return build_matrix(_kind(spec), truncate_cf(cf, spec.shift), spec.n, spec.m, spec, hub)


@lru_cache(maxsize=None)
def from_hub(spec: BasisSpec) -> CobMatrix:
    """Matrix from the monomial window back to the basis"""
    hub = spec.hub()
    if spec.family is Family.MONOMIAL:
        return identity(spec.dimension).with_bases(hub, spec)
    forward = to_hub(spec)
    if spec.custom or spec.superposed:
        return invert_triangular(forward)
    family = spec.family
    if spec.alternating:
        # InverseMismatch propagates when the closed-form layout does not invert forward
        return invert_alternating(forward, from_monomial_cf(family, spec.orientation), _alternating_spec(spec))
    if spec.orientation is Orientation.ASC and family.classical:
        logger.debug(f"band inverse for {spec.describe()}")
        return band_inverse(forward)
    if spec.shift:
        return invert_triangular(forward)
    cf = from_monomial_cf(family, spec.orientation)
    return build_matrix(_kind(spec), cf, spec.n, spec.m, hub, spec)


def _check_span(a: BasisSpec, b: BasisSpec) -> None:
    if (a.m, a.n, a.step) != (b.m, b.n, b.step):
        raise SpanError(f"{a.describe()} and {b.describe()} span different monomial windows")


def _compose_route(a: BasisSpec, b: BasisSpec) -> CobMatrix:
    for spec in (a, b):
        if spec.custom or spec.alternating:
            raise KindError(f"no closed-form coefficient function for {spec.describe()}")
    if b.shift and b.orientation is Orientation.DESC:
        raise KindError(f"no closed-form inverse for the truncated basis {b.describe()}")
    cf2 = truncate_cf(to_monomial_cf(a.family, a.step), a.shift)
    cf1 = truncate_cf(from_monomial_cf(b.family, b.orientation, b.step), b.shift)
    kind = MatrixKind(a.orientation, b.orientation, a.step == 2)
    if not kind.mixed:
        return build_matrix(kind, compose_cf(kind, cf1, cf2), a.n, a.m, a, b)
    bound = a.m if kind.domain is Orientation.DESC else a.n
    full = build_mixed_matrix(kind, compose_cf(kind, cf1, cf2, bound), a.n, a.m, a, b)
    return full.with_shape(detect_shape(full.entries))


def cob(a: BasisSpec, b: BasisSpec, route: str = "hub") -> CobMatrix:
    """Change-of-basis matrix taking coordinates in a to coordinates in b"""
    _check_span(a, b)
    if route == "compose":
        return _compose_route(a, b)
    if route != "hub":
        raise KindError(f"unknown route {route!r}")
    return matmul(from_hub(b), to_hub(a))


# --- conversion ----------------------------------------------------------

def _fits(p: Polynomial, spec: BasisSpec) -> Optional[str]:
    """None when p lies in the window's span, else the reason it does not"""
    for degree, _ in p:
        if not spec.m <= degree <= spec.n:
            return f"degree {degree} lies outside [{spec.m}..{spec.n}]"
        if (degree - spec.m) % spec.step:
            return f"degree {degree} has the wrong parity for a step-2 window starting at {spec.m}"
    return None


def convert(p: Polynomial, spec: BasisSpec) -> CoordVector:
    """Coordinates of p in the basis; p must lie in its span"""
    p.degree()
    reason = _fits(p, spec)
    if reason is not None:
        raise SpanError(f"cannot express {p.to_text()} in {spec.describe()}: {reason}")
    vector = [p.coefficient(spec.m + spec.step * i) for i in range(spec.dimension)]
    inverse = from_hub(spec)
    coords = tuple(
        sum((inverse.entries[i][j] * vector[j] for j in range(spec.dimension)), Fraction(0))
        for i in range(spec.dimension)
    )
    return CoordVector(basis=spec, coords=coords)


def convert_parts(p: Polynomial, spec: BasisSpec, split_parity: bool = True) -> Tuple[CoordVector, ...]:
    """
    Convert p, splitting it into even and odd parts when a parity-definite
    family cannot hold it whole. Each part is expressed on its own degree
    range, which must lie inside the basis window.
    """
    p.degree()
    if _fits(p, spec) is None:
        return (convert(p, spec),)
    family = spec.family
    if not split_parity or family is None or not family.definite_parity or spec.alternating:
        return (convert(p, spec),)
    vectors = []
    for part in (p.even_part(), p.odd_part()):
        if part.is_zero():
            continue
        low, high = part.min_degree(), part.degree()
        if low < spec.m or high > spec.n:
            raise SpanError(f"{part.to_text()} leaves the window [{spec.m}..{spec.n}]")
        logger.debug(f"converting parity part {part.to_text()} on [{low}..{high}]")
        vectors.append(convert(part, spec.with_window(low, high)))
    return tuple(vectors)


def reconstruct(vector: CoordVector) -> Polynomial:
    polys = basis_polynomials(vector.basis)
    if len(polys) != len(vector.coords):
        raise SpanError(f"{len(vector.coords)} coordinates for a basis of {len(polys)} elements")
    total = Polynomial.zero()
    for coeff, poly in zip(vector.coords, polys):
        total = total + poly.scale(coeff)
    return total


# --- category laws -------------------------------------------------------

def _check(report: LawReport, name: str, predicate) -> None:
    try:
        passed = bool(predicate())
        report.checks.append(LawCheck(name=name, passed=passed, detail="" if passed else "entries differ"))
    except ChangeOfBasisError as e:
        report.checks.append(LawCheck(name=name, passed=False, detail=str(e)))


def _same_side_bases(a: BasisSpec, b: BasisSpec) -> bool:
    return a.orientation is b.orientation


def verify_category(bases: Sequence[BasisSpec], sample: Optional[int] = None) -> LawReport:
    """
    Check the groupoid and truncation-functor laws on bases sharing one window:
    identities, inverses, composition, associativity, triangular and
    alternating shape closure, T(MN) = T(M)T(N) and T(I) = I.
    """
    sample = sample or config.CATEGORY_SAMPLE
    report = LawReport()
    bases = list(dict.fromkeys(bases))
    for b in bases:
        _check(report, f"identity {b.describe()}", lambda b=b: cob(b, b).is_identity())
    if len(bases) < 2:
        return report

    for a, b in itertools.permutations(bases, 2):
        _check(
            report,
            f"inverse {a.describe()} <-> {b.describe()}",
            lambda a=a, b=b: matmul(cob(b, a), cob(a, b)).is_identity(),
        )

    triples = list(itertools.islice(itertools.permutations(bases, 3), sample))
    for a, b, c in triples:
        _check(
            report,
            f"composition {a.describe()} -> {b.describe()} -> {c.describe()}",
            lambda a=a, b=b, c=c: matmul(cob(b, c), cob(a, b)).same_entries(cob(a, c)),
        )
        _check(
            report,
            f"associativity {a.describe()} -> {b.describe()} -> {c.describe()}",
            lambda a=a, b=b, c=c: matmul(matmul(cob(c, a), cob(b, c)), cob(a, b)).same_entries(
                matmul(cob(c, a), matmul(cob(b, c), cob(a, b)))
            ),
        )

    for a, b in itertools.permutations(bases, 2):
        if not _same_side_bases(a, b):
            continue
        if a.alternating and b.alternating and not (a.superposed or b.superposed):
            _check(
                report,
                f"alternating closure {a.describe()} -> {b.describe()}",
                lambda a=a, b=b: cob(a, b).side() is not None
                and all(cob(a, b).entries[i][j] == 0 for i in range(a.dimension) for j in range(a.dimension) if (i - j) % 2),
            )
        else:
            _check(
                report,
                f"triangular closure {a.describe()} -> {b.describe()}",
                lambda a=a, b=b: cob(a, b).side() is not None and invert_triangular(cob(a, b)).side() is not None,
            )

    dim = bases[0].dimension
    if dim >= 2:
        checked = 0
        for a, b, c in triples:
            if not (_same_side_bases(a, b) and _same_side_bases(b, c)):
                continue
            for k1, k2 in enumerate_truncations(dim):
                _check(
                    report,
                    f"functor tr{k1},{k2} {a.describe()} -> {b.describe()} -> {c.describe()}",
                    lambda a=a, b=b, c=c, k1=k1, k2=k2: truncate_matrix(
                        matmul(cob(b, c), cob(a, b)), k1, k2
                    ).same_entries(
                        matmul(truncate_matrix(cob(b, c), k1, k2), truncate_matrix(cob(a, b), k1, k2))
                    ),
                )
            checked += 1
            if checked >= sample:
                break
        for k1, k2 in enumerate_truncations(dim):
            _check(
                report,
                f"functor identity tr{k1},{k2}",
                lambda k1=k1, k2=k2: truncate_matrix(cob(bases[0], bases[0]), k1, k2).is_identity(),
            )
    logger.info(f"category check: {len(report.checks)} laws, {len(report.failures())} failures")
    return report


# --- registry ------------------------------------------------------------

class BasisRegistry:
    """
    Registered bases addressed by integer handles. Registration is
    serialized; lookups and conversions read an immutable snapshot.
    """

    def __init__(self):
        self._bases: Dict[BasisId, BasisSpec] = {}
        self._lock = threading.Lock()

    def register(self, spec: BasisSpec) -> BasisId:
        spec.check()
        validate_basis_polynomials(basis_polynomials(spec), spec)
        with self._lock:
            basis_id = BasisId(len(self._bases))
            self._bases = {**self._bases, basis_id: spec}
        logger.debug(f"registered basis {basis_id}: {spec.describe()}")
        return basis_id

    def get(self, basis_id: BasisId) -> BasisSpec:
        try:
            return self._bases[basis_id]
        except KeyError:
            raise BasisError(f"unknown basis id {basis_id}") from None

    def ids(self) -> List[BasisId]:
        return list(self._bases)

    def cob(self, source: BasisId, target: BasisId, route: str = "hub") -> CobMatrix:
        return cob(self.get(source), self.get(target), route)

    def convert(self, p: Polynomial, target: BasisId) -> CoordVector:
        return convert(p, self.get(target))

    def verify(self, ids: Optional[Sequence[BasisId]] = None) -> LawReport:
        chosen = self.ids() if ids is None else list(ids)
        return verify_category([self.get(i) for i in chosen])
