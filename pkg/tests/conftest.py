"""Pytest configuration and fixtures."""

import pytest

from coalgebra_workbench.coalgebra import divided_power, grouplike, matrix_coalgebra, trig
from coalgebra_workbench.config import WorkbenchConfig
from coalgebra_workbench.field import GF, QQ
from coalgebra_workbench.serialization import emit_document

BUILDER_NAMES = [
    "grouplike:1",
    "grouplike:2",
    "grouplike:3",
    "matrix_coalgebra:2",
    "divided_power:0",
    "divided_power:2",
    "divided_power:3",
    "trig",
]


@pytest.fixture(params=[QQ, GF(5)], ids=["Q", "GF5"])
def field(request):
    """Both fields the workbench is exercised over."""
    return request.param


@pytest.fixture
def g2():
    return grouplike(2)


@pytest.fixture
def dp2():
    return divided_power(2)


@pytest.fixture
def m2():
    return matrix_coalgebra(2)


@pytest.fixture
def trig_q():
    return trig(QQ)


@pytest.fixture
def sample_config():
    """Sample configuration for testing."""
    return WorkbenchConfig(
        default_field="Q",
        seed=7,
        max_dim=4,
        selftest_count=2,
        report_timing=False,
        default_match_threshold=70,
        log_level="WARNING",
    )


@pytest.fixture
def write_structure(tmp_path):
    """Write a structure to a file in ``tmp_path`` and return the path."""

    def _write(structure, name: str):
        path = tmp_path / name
        path.write_text(emit_document(structure), encoding="utf-8")
        return path

    return _write
