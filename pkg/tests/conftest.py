"""Pytest fixtures for testing."""

import logging
from pathlib import Path
from unittest.mock import Mock

import pytest

from config import Settings
from quivers.catalog import (
    dynkin_quiver,
    kronecker_quiver,
    kronecker_stability,
    single_vertex_quiver,
)
from quivers.quiver import Stability, load_stability
from services.hn_recursion import HNContext

DATA_DIR = Path(__file__).resolve().parent.parent / "quivers" / "data"


@pytest.fixture
def mock_logger():
    """Mock logger for testing."""
    return Mock(spec=logging.Logger)


@pytest.fixture
def data_dir():
    """Directory holding the sample quiver files."""
    return DATA_DIR


@pytest.fixture
def settings():
    """Settings that do not depend on the environment."""
    return Settings(
        default_order=4,
        oracle_order=2,
        budget_reps=100_000,
        budget_subspaces=1_000,
        seed=7,
        output_format="text",
        log_level="WARNING",
    )


@pytest.fixture
def q0():
    """Q^0: one vertex, no arrows."""
    return single_vertex_quiver()


@pytest.fixture
def k1():
    return kronecker_quiver(1)


@pytest.fixture
def k2():
    return kronecker_quiver(2)


@pytest.fixture
def k3():
    return kronecker_quiver(3)


@pytest.fixture
def a2():
    return dynkin_quiver("A2")


@pytest.fixture
def a3_linear():
    return dynkin_quiver("A3", "linear")


@pytest.fixture
def a3_alternating():
    return dynkin_quiver("A3", "alternating")


@pytest.fixture
def q0_ctx(q0):
    return HNContext(q0, Stability((0,)))


@pytest.fixture
def k1_ctx(k1):
    """K_1 with Theta = j^*."""
    return HNContext(k1, kronecker_stability(k1))


@pytest.fixture
def k2_ctx(k2):
    return HNContext(k2, kronecker_stability(k2))


@pytest.fixture
def k3_ctx(k3):
    return HNContext(k3, kronecker_stability(k3))


@pytest.fixture
def a3_linear_ctx(a3_linear):
    return HNContext(a3_linear, load_stability(a3_linear, {"1": 0, "2": 1, "3": 3}))


@pytest.fixture
def a3_alternating_ctx(a3_alternating):
    theta = load_stability(a3_alternating, {"1": 0, "2": 3, "3": 1})
    return HNContext(a3_alternating, theta)


@pytest.fixture
def a3_linear_other_ctx(a3_linear):
    """Linear A_3 under a second generic stability."""
    return HNContext(a3_linear, load_stability(a3_linear, {"1": 0, "2": 2, "3": 5}))


@pytest.fixture
def a3_alternating_other_ctx(a3_alternating):
    theta = load_stability(a3_alternating, {"1": 1, "2": 5, "3": 0})
    return HNContext(a3_alternating, theta)
