"""
Shared fixtures for the PolyBasis tests
"""

import pytest
from fastapi.testclient import TestClient

from utils.exact import Polynomial


@pytest.fixture
def sample_polynomial() -> Polynomial:
    return Polynomial.parse("16x^7 - 12x^5 + 5x^4 + 3x^2")


@pytest.fixture
def client() -> TestClient:
    from app import app

    return TestClient(app)
