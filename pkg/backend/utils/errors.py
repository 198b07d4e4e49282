"""
Change-of-Basis Errors
Exception hierarchy shared by the exact arithmetic, matrix and registry layers
"""


class ChangeOfBasisError(ValueError):
    """Base class for every domain error raised by PolyBasis"""


class ZeroPolynomialError(ChangeOfBasisError):
    """The zero polynomial has no degree, minimum degree or parity"""


class EmptyTruncation(ChangeOfBasisError):
    """A truncation window does not meet the degree range of the polynomial"""


class ParityMismatch(ChangeOfBasisError):
    """Window endpoints or a polynomial disagree with a parity-definite family"""


class WindowError(ChangeOfBasisError):
    """Degree window or index outside the valid domain"""


class KindError(ChangeOfBasisError):
    """Matrix kind does not fit the requested construction"""


class DimensionMismatch(ChangeOfBasisError):
    """Matrix dimensions or basis metadata do not line up"""


class ShapeError(ChangeOfBasisError):
    """Matrix shape tag does not allow the requested operation"""


class BandPreconditionError(ShapeError):
    """Matrix is not built from truncations of a single polynomial"""


class SingularMatrixError(ChangeOfBasisError):
    """Zero pivot met during exact elimination or substitution"""


class InverseMismatch(ChangeOfBasisError):
    """A supplied inverse coefficient function does not invert the matrix"""


class BasisError(ChangeOfBasisError):
    """Basis description or polynomial list is not a valid basis"""


class SpanError(BasisError):
    """Polynomial or basis does not span the expected monomial window"""


class LinearDependenceError(BasisError):
    """Basis polynomials repeat a degree or minimum degree"""


class DescriptorError(ChangeOfBasisError):
    """Text form of a basis, polynomial or matrix could not be parsed"""
