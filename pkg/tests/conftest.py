# tests/conftest.py
from typing import List

import numpy as np
import pytest
from loguru import logger

from domain.polynomials.entities import ComplexPolynomial
from domain.polynomials.services import parse_polynomial
from domain.shaft.value_objects import ShaftParams


@pytest.fixture(autouse=True)
def testing_environment(monkeypatch):
    """Settings come from config/environments/testing.yaml"""
    monkeypatch.setenv("ENVIRONMENT", "testing")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def shaft_polynomial() -> ComplexPolynomial:
    """s^3 + (4+4i)s^2 + 10s + 1, the stable shaft point"""
    return parse_polynomial("4+4i,10,1")


@pytest.fixture
def stable_shaft() -> ShaftParams:
    return ShaftParams(k=1, omega=2, Omega=2, kp=-10, kI=-1)


@pytest.fixture
def unstable_shaft() -> ShaftParams:
    return ShaftParams(k=1, omega=2, Omega=2, kp=0, kI=1)


@pytest.fixture
def log_messages() -> List[str]:
    """Messages logged at WARNING and above while the test runs"""
    messages: List[str] = []
    handler_id = logger.add(lambda message: messages.append(str(message)), level="WARNING", format="{message}")
    yield messages
    logger.remove(handler_id)

