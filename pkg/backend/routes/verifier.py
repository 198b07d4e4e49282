"""
Verifier Route
Runs a named verification suite and reports its failures
"""

import logging
from typing import List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field

from models.suites import run_suite
from utils.descriptors import check_degree
from utils.errors import ChangeOfBasisError

router = APIRouter()
logger = logging.getLogger(__name__)


class VerifyRequest(BaseModel):
    suite: str  # fixtures, groupoid, oracle, theorems or case-studies
    n: Optional[int] = Field(default=None, ge=0)
    m: Optional[int] = Field(default=None, ge=0)
    max_n: Optional[int] = Field(default=None, ge=0)


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checked: int
    failed: int
    failures: List[str]


@router.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest):
    """
    Run a suite and report its failing checks by name
    """
    try:
        for bound in (request.n, request.max_n):
            if bound is not None:
                check_degree(bound)
        report = run_suite(request.suite, n=request.n, m=request.m, max_n=request.max_n)
        return VerifyResponse(
            suite=report.suite,
            passed=report.passed,
            checked=report.checked,
            failed=report.failed,
            failures=report.failures,
        )
    except ChangeOfBasisError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error running suite {request.suite}: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Error running suite: {str(e)}")
