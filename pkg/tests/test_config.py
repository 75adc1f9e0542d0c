"""Tests for configuration loading."""

import logging

import pytest

from coalgebra_workbench.config import WorkbenchConfig
from coalgebra_workbench.field import GF, QQ

ENV_VARS = [
    "WORKBENCH_DEFAULT_FIELD",
    "WORKBENCH_SEED",
    "WORKBENCH_MAX_DIM",
    "WORKBENCH_SELFTEST_COUNT",
    "WORKBENCH_REPORT_TIMING",
    "WORKBENCH_MATCH_THRESHOLD",
    "LOG_LEVEL",
]


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """No workbench variables and no .env file in the working directory.

    Each variable is set before it is deleted so that monkeypatch removes
    whatever load_dotenv writes into os.environ during the test.
    """
    monkeypatch.chdir(tmp_path)
    for name in ENV_VARS:
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    return monkeypatch


class TestWorkbenchConfig:
    def test_defaults(self, clean_env):
        config = WorkbenchConfig.from_env()
        assert config == WorkbenchConfig()
        assert config.field == QQ
        assert config.logging_level == logging.WARNING
        assert config.report_timing is False

    def test_reads_environment(self, clean_env):
        clean_env.setenv("WORKBENCH_DEFAULT_FIELD", "GF(7)")
        clean_env.setenv("WORKBENCH_SEED", "11")
        clean_env.setenv("WORKBENCH_MAX_DIM", "3")
        clean_env.setenv("WORKBENCH_SELFTEST_COUNT", "5")
        clean_env.setenv("WORKBENCH_REPORT_TIMING", "yes")
        clean_env.setenv("WORKBENCH_MATCH_THRESHOLD", "80")
        clean_env.setenv("LOG_LEVEL", "debug")
        config = WorkbenchConfig.from_env()
        assert config.field == GF(7)
        assert config.seed == 11
        assert config.max_dim == 3
        assert config.selftest_count == 5
        assert config.report_timing is True
        assert config.default_match_threshold == 80
        assert config.logging_level == logging.DEBUG

    def test_reads_dotenv_file(self, clean_env, tmp_path):
        (tmp_path / ".env").write_text("WORKBENCH_SEED=23\n", encoding="utf-8")
        assert WorkbenchConfig.from_env().seed == 23

    @pytest.mark.parametrize(
        "name, value",
        [
            ("WORKBENCH_SEED", "-1"),
            ("WORKBENCH_SEED", "many"),
            ("WORKBENCH_MAX_DIM", "0"),
            ("WORKBENCH_REPORT_TIMING", "sometimes"),
            ("WORKBENCH_MATCH_THRESHOLD", "101"),
            ("WORKBENCH_DEFAULT_FIELD", "GF(4)"),
            ("LOG_LEVEL", "LOUD"),
        ],
    )
    def test_invalid_values(self, clean_env, name, value):
        clean_env.setenv(name, value)
        with pytest.raises(ValueError):
            WorkbenchConfig.from_env()

    def test_sample_config(self, sample_config):
        assert sample_config.seed == 7
        assert sample_config.field == QQ
