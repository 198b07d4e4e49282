"""
Matrix Builder Route
Builds the exact change-of-basis matrix between two described bases on one monomial window
"""

import logging
from typing import List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field

from models.registry import cob
from utils.descriptors import basis_pair
from utils.errors import ChangeOfBasisError
from utils.serialize import matrix_to_document

router = APIRouter()
logger = logging.getLogger(__name__)


class MatrixRequest(BaseModel):
    source: str  # basis descriptor, e.g. "zernike:asc"
    target: str
    n: Optional[int] = Field(default=None, ge=0)  # taken from a descriptor window @u,l when omitted
    m: Optional[int] = Field(default=None, ge=0)
    route: str = "hub"  # "hub" or "compose"
    decimal: Optional[int] = Field(default=None, ge=0, le=50)


class MatrixResponse(BaseModel):
    dim: int
    shape: str
    domain: Optional[str]
    range: Optional[str]
    entries: List[List[str]]  # exact "p/q" strings
    decimal: Optional[List[List[str]]] = None


@router.post("/matrix", response_model=MatrixResponse)
async def build_matrix(request: MatrixRequest):
    """
    Matrix taking coordinates in the source basis to coordinates in the target basis
    """
    try:
        source, target = basis_pair(request.source, request.target, request.n, request.m)
        matrix = cob(source, target, route=request.route)
        logger.info(f"built {matrix.dim}x{matrix.dim} matrix {source.describe()} -> {target.describe()}")
        return MatrixResponse(**matrix_to_document(matrix, request.decimal))
    except ChangeOfBasisError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error building matrix: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Error building matrix: {str(e)}")
