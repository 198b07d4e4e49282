"""
Converter Route
Expresses a polynomial in a described basis, split into even and odd parts when the family needs it
"""

import logging
from typing import List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field

from models.registry import convert_parts
from utils.descriptors import conversion_basis
from utils.errors import ChangeOfBasisError
from utils.exact import Polynomial
from utils.serialize import coords_to_strings, format_decimal

router = APIRouter()
logger = logging.getLogger(__name__)


class ConvertRequest(BaseModel):
    polynomial: str  # e.g. "16x^7-12x^5+5x^4+3x^2"
    target: str
    n: Optional[int] = Field(default=None, ge=0)
    m: Optional[int] = Field(default=None, ge=0)
    split: bool = True
    decimal: Optional[int] = Field(default=None, ge=0, le=50)


class CoordinatePart(BaseModel):
    basis: str
    coords: List[str]
    decimal: Optional[List[str]] = None


class ConvertResponse(BaseModel):
    polynomial: str
    parts: List[CoordinatePart]


@router.post("/convert", response_model=ConvertResponse)
async def convert_polynomial(request: ConvertRequest):
    """
    Coordinates of the polynomial, ordered as the basis elements
    """
    try:
        p = Polynomial.parse(request.polynomial)
        basis = conversion_basis(request.target, p, request.n, request.m)
        vectors = convert_parts(p, basis, split_parity=request.split)
        parts = [
            CoordinatePart(
                basis=vector.basis.describe(),
                coords=coords_to_strings(vector.coords),
                decimal=None
                if request.decimal is None
                else [format_decimal(c, request.decimal) for c in vector.coords],
            )
            for vector in vectors
        ]
        return ConvertResponse(polynomial=p.to_text(), parts=parts)
    except ChangeOfBasisError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error converting polynomial: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Error converting polynomial: {str(e)}")
