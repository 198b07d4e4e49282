"""
Serialization
Text grid, CSV and JSON-document forms of change-of-basis matrices and coordinate vectors
"""

import csv
import io
import logging
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from models.matrices import CobMatrix, Shape
from utils.errors import DescriptorError
from utils.exact import as_rational, format_rational

logger = logging.getLogger(__name__)


def format_decimal(value: Fraction, places: int) -> str:
    """Display-only rounding of an exact rational"""
    with localcontext() as ctx:
        ctx.prec = max(28, places + 20)
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        return str(quotient.quantize(Decimal(1).scaleb(-places)))


def _describe(basis: Any) -> Optional[str]:
    if basis is None:
        return None
    describe = getattr(basis, "describe", None)
    return describe() if callable(describe) else str(basis)


def matrix_to_text(m: CobMatrix, decimal: Optional[int] = None) -> str:
    """Right-aligned grid of exact entries, with a rounded grid below when `decimal` is set"""
    cells = [[format_rational(x) for x in row] for row in m.entries]
    width = max(len(c) for row in cells for c in row)
    lines = [" ".join(c.rjust(width) for c in row) for row in cells]
    if decimal is not None:
        rounded = [[format_decimal(x, decimal) for x in row] for row in m.entries]
        dwidth = max(len(c) for row in rounded for c in row)
        lines.append("")
        lines.extend(" ".join(c.rjust(dwidth) for c in row) for row in rounded)
    return "\n".join(lines)


def matrix_to_csv(m: CobMatrix) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in m.entries:
        writer.writerow(format_rational(x) for x in row)
    return buffer.getvalue()


def matrix_from_csv(text: str, shape: Optional[Shape] = None) -> CobMatrix:
    """Parse rows of "p/q" cells; the shape is detected when not given"""
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise DescriptorError("no rows in CSV matrix")
    return CobMatrix.from_rows([[as_rational(cell.strip()) for cell in row] for row in rows], shape)


def matrix_to_document(m: CobMatrix, decimal: Optional[int] = None) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "dim": m.dim,
        "shape": m.shape.value,
        "domain": _describe(m.domain_basis),
        "range": _describe(m.range_basis),
        "entries": [[format_rational(x) for x in row] for row in m.entries],
    }
    if decimal is not None:
        document["decimal"] = [[format_decimal(x, decimal) for x in row] for row in m.entries]
    return document


def matrix_from_document(document: Dict[str, Any]) -> CobMatrix:
    try:
        entries = document["entries"]
        shape = Shape(document["shape"]) if document.get("shape") else None
    except (KeyError, TypeError, ValueError) as e:
        raise DescriptorError(f"malformed matrix document: {e}") from e
    return CobMatrix.from_rows(entries, shape)


def coords_to_strings(coords: Sequence[Fraction]) -> List[str]:
    return [format_rational(c) for c in coords]


def coords_to_text(coords: Sequence[Fraction], decimal: Optional[int] = None) -> str:
    text = "(" + ", ".join(coords_to_strings(coords)) + ")"
    if decimal is not None:
        text += "  ~ (" + ", ".join(format_decimal(c, decimal) for c in coords) + ")"
    return text
