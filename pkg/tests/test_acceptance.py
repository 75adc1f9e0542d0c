"""The invariant suites at full acceptance scale."""

import pytest

from coalgebra_workbench.config import WorkbenchConfig
from coalgebra_workbench.selftest import ACCEPTANCE_COUNTS, ACCEPTANCE_PER_BASE, DUALITY_BASES, run_acceptance


@pytest.fixture(scope="module")
def acceptance_report():
    return run_acceptance(0, WorkbenchConfig(max_dim=4), timing=False)


@pytest.mark.slow
class TestAcceptance:
    def test_every_suite_passes(self, acceptance_report):
        failing = [v for v in acceptance_report.verdicts if v["verdict"] != "PASS"]
        assert not failing, failing

    def test_object_duality_covers_each_base(self, acceptance_report):
        runs = {v["suite"]: v["instances"] for v in acceptance_report.verdicts if v["suite"].startswith("object_duality[")}
        for label in DUALITY_BASES:
            valid = runs[f"object_duality[{label}]"]
            broken = runs[f"object_duality[{label}, mutated]"]
            assert valid == broken
            assert valid + broken >= ACCEPTANCE_PER_BASE

    @pytest.mark.parametrize("suite, minimum", [
        ("psi_contract", 100),
        ("morphism_duality", 200),
        ("diagram_square", 200),
        ("module_formulations", 100),
        ("cotensor_duality", 100),
        ("towers", 50),
        ("adjunction", 100),
    ])
    def test_instance_counts(self, acceptance_report, suite, minimum):
        instances = {v["suite"]: v["instances"] for v in acceptance_report.verdicts}
        assert instances[suite] == ACCEPTANCE_COUNTS[suite] >= minimum
