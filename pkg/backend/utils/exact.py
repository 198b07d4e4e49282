"""
Exact Arithmetic
Rational scalars, combinatorial primitives and sparse polynomials over the rationals
"""

import math
import re
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from utils.errors import (
    DescriptorError,
    EmptyTruncation,
    WindowError,
    ZeroPolynomialError,
)

Scalar = Union[int, Fraction, str]


def as_rational(value: Scalar) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a canonical Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DescriptorError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise DescriptorError(f"not a rational number: {value!r}") from e
    raise DescriptorError(f"not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def binomial(r: Scalar, k: int) -> Fraction:
    """
    Generalized binomial coefficient r(r-1)...(r-k+1)/k!
    Integer r with 0 <= r < k gives 0
    """
    if k < 0:
        raise WindowError(f"binomial needs k >= 0, got {k}")
    r = as_rational(r)
    if r.denominator == 1 and r >= 0:
        return Fraction(math.comb(r.numerator, k))
    result = Fraction(1)
    for i in range(k):
        result *= r - i
    return result / math.factorial(k)


def pochhammer(x: Scalar, k: int) -> Fraction:
    """
    Rising factorial (x)_k for k >= 0, extended to (x)_{-1} = 1/(x-1)
    """
    x = as_rational(x)
    if k < -1:
        raise WindowError(f"pochhammer needs k >= -1, got {k}")
    if k == -1:
        if x == 1:
            raise ZeroDivisionError("(1)_{-1} is undefined")
        return 1 / (x - 1)
    result = Fraction(1)
    for i in range(k):
        result *= x + i
    return result


def double_factorial(k: int) -> int:
    if k < 0:
        raise WindowError(f"double factorial needs k >= 0, got {k}")
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def factorial(k: int) -> int:
    return math.factorial(k)


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"

    @classmethod
    def of_degree(cls, degree: int) -> "Parity":
        return cls.EVEN if degree % 2 == 0 else cls.ODD


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>\d+(?:\s*/\s*\d+)?)?\s*\*?\s*
        (?P<var>x(?:\s*(?:\^|\*\*)\s*(?P<power>\d+))?)?\s*""",
    re.VERBOSE,
)


class Polynomial:
    """
    Sparse univariate polynomial with exact rational coefficients.

    Terms are kept as a degree -> coefficient map with no zero coefficients,
    so the zero polynomial is the empty map. Instances are immutable and
    hashable; arithmetic returns new polynomials.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, Scalar], Iterable[Tuple[int, Scalar]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: Dict[int, Fraction] = {}
        for degree, coeff in items:
            degree = int(degree)
            if degree < 0:
                raise WindowError(f"negative degree {degree}")
            store[degree] = store.get(degree, Fraction(0)) + as_rational(coeff)
        self._terms = {d: c for d, c in sorted(store.items()) if c != 0}

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "Polynomial":
        return cls({degree: coeff})

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, degree: int) -> Fraction:
        return self._terms.get(degree, Fraction(0))

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no minimum degree")
        return min(self._terms)

    def parity(self) -> Parity:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no parity")
        parities = {d % 2 for d in self._terms}
        if len(parities) > 1:
            return Parity.NONE
        return Parity.EVEN if parities == {0} else Parity.ODD

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        merged = dict(self._terms)
        for d, c in other:
            merged[d] = merged.get(d, Fraction(0)) + c
        return Polynomial(merged)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial({d: -c for d, c in self})

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = as_rational(factor)
        return Polynomial({d: c * factor for d, c in self})

    def __mul__(self, factor: Scalar) -> "Polynomial":
        # Scalars only; polynomial products are not part of the algebra here
        if isinstance(factor, Polynomial):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k"""
        return Polynomial({d + k: c for d, c in self})

    def evaluate(self, x: Scalar) -> Fraction:
        x = as_rational(x)
        return sum((c * x ** d for d, c in self), Fraction(0))

    def truncate(self, u: int, l: int) -> "Polynomial":
        """
        Keep the terms whose degree lies in [max(l, min-deg), min(u, deg)].

        A bound whose parity differs from a definite-parity polynomial selects
        the same terms as its neighbour of the right parity. Two truncations
        compose to the truncation on the intersected window.
        """
        if l < 0 or u < l:
            raise WindowError(f"truncation window needs u >= l >= 0, got u={u}, l={l}")
        top = min(u, self.degree())
        bottom = max(l, self.min_degree())
        kept = {d: c for d, c in self if bottom <= d <= top}
        if not kept:
            raise EmptyTruncation(
                f"window [{l}, {u}] misses degrees [{self.min_degree()}, {self.degree()}]"
            )
        return Polynomial(kept)

    def even_part(self) -> "Polynomial":
        return Polynomial({d: c for d, c in self if d % 2 == 0})

    def odd_part(self) -> "Polynomial":
        return Polynomial({d: c for d, c in self if d % 2 == 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"Polynomial('{self.to_text()}')"

    def to_text(self) -> str:
        """Render as signed terms, highest degree first, e.g. 16x^7-12x^5+3x^2"""
        if not self._terms:
            return "0"
        parts: List[str] = []
        for degree in sorted(self._terms, reverse=True):
            coeff = self._terms[degree]
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if degree == 0:
                body = format_rational(magnitude)
            else:
                power = "x" if degree == 1 else f"x^{degree}"
                body = power if magnitude == 1 else f"{format_rational(magnitude)}{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign}{body}")
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse the signed-term text form, e.g. "16x^7-12x^5+5x^4+3x^2" or "1/24x^4" """
        source = text.strip()
        if not source:
            raise DescriptorError("empty polynomial text")
        terms: List[Tuple[int, Fraction]] = []
        pos = 0
        while pos < len(source):
            match = _TERM.match(source, pos)
            if match is None or match.end() == pos:
                raise DescriptorError(f"cannot parse polynomial near {source[pos:]!r}")
            if not match.group("coeff") and not match.group("var"):
                raise DescriptorError(f"cannot parse polynomial near {source[pos:]!r}")
            if terms and not match.group("sign"):
                raise DescriptorError(f"missing sign before {source[pos:]!r}")
            coeff = as_rational(match.group("coeff").replace(" ", "")) if match.group("coeff") else Fraction(1)
            if match.group("sign") == "-":
                coeff = -coeff
            if match.group("var"):
                degree = int(match.group("power")) if match.group("power") else 1
            else:
                degree = 0
            terms.append((degree, coeff))
            pos = match.end()
        return cls(terms)

    def to_pairs(self) -> List[Tuple[int, str]]:
        return [(d, format_rational(c)) for d, c in self]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, Scalar]]) -> "Polynomial":
        return cls([(int(d), as_rational(c)) for d, c in pairs])


def poly_truncate(f: Polynomial, u: int, l: int) -> Polynomial:
    return f.truncate(u, l)


def poly_parity(f: Polynomial) -> Parity:
    return f.parity()


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_scale(f: Polynomial, factor: Scalar) -> Polynomial:
    return f.scale(factor)


def poly_eval(f: Polynomial, x: Scalar) -> Fraction:
    return f.evaluate(x)
