"""Tests for the randomized invariant suites."""

import pytest

from coalgebra_workbench.config import WorkbenchConfig
from coalgebra_workbench.errors import PreconditionError
from coalgebra_workbench.field import GF, QQ
from coalgebra_workbench.generators import PRNG_NAME, make_rng
from coalgebra_workbench.models import DiagramVerdict
from coalgebra_workbench.selftest import (
    ACCEPTANCE_COUNTS,
    DUALITY_BASES,
    SUITES,
    acceptance_plans,
    run_acceptance,
    run_selftest,
    run_suite,
    suite_diagram_square,
    suite_object_duality,
)


@pytest.fixture(scope="module")
def selftest_report():
    return run_selftest(7, 2, WorkbenchConfig(max_dim=4))


@pytest.mark.slow
class TestRunSelftest:
    def test_every_suite_passes(self, selftest_report):
        assert selftest_report.passed, [v for v in selftest_report.verdicts if v["verdict"] != "PASS"]

    def test_suites_run_in_order(self, selftest_report):
        assert [v["suite"] for v in selftest_report.verdicts] == [name for name, _ in SUITES]
        assert all(v["instances"] == 2 for v in selftest_report.verdicts)

    def test_header(self, selftest_report):
        assert selftest_report.header == {
            "seed": 7,
            "prng": PRNG_NAME,
            "count": 2,
            "fields": ["Q", "GF(5)"],
            "max_dim": 4,
        }

    def test_deterministic(self, selftest_report, sample_config):
        again = run_selftest(7, 2, sample_config)
        assert again.to_dict() == selftest_report.to_dict()
        assert "timing" not in again.to_dict()

    def test_timing_on_request(self, sample_config):
        report = run_selftest(1, 1, sample_config, timing=True)
        assert set(report.timing) == {name for name, _ in SUITES}


class TestRunSuite:
    def test_failures_are_reported(self):
        def failing(rng, field, max_dim):
            return [DiagramVerdict("always", False), DiagramVerdict("never", True)]

        result = run_suite("failing", failing, make_rng(0), 3, 2)
        assert result["verdict"] == "FAIL"
        assert result["failed_instances"] == 3
        assert result["checks"] == 6
        assert [f["instance"] for f in result["failures"]] == [0, 1, 2]
        assert result["failures"][1]["field"] == "GF(5)"

    def test_errors_count_as_failures(self):
        def raising(rng, field, max_dim):
            raise PreconditionError("uncertified")

        result = run_suite("raising", raising, make_rng(0), 1, 2)
        assert result["verdict"] == "FAIL"
        assert result["failures"][0]["diagram"] == "error.precondition"

    def test_passing_suite_has_no_failures_key(self):
        result = run_suite("ok", lambda rng, field, max_dim: [DiagramVerdict("x", True)], make_rng(0), 2, 2)
        assert result == {"suite": "ok", "verdict": "PASS", "instances": 2, "checks": 2, "failed_instances": 0}


class TestPerBaseSuites:
    @pytest.mark.parametrize("field", [QQ, GF(5)], ids=["Q", "GF5"])
    def test_diagram_square_visits_every_base(self, field):
        verdicts = suite_diagram_square(make_rng(2), field, 3)
        assert {v.diagram.split(".", 1)[0] for v in verdicts} == set(DUALITY_BASES)
        assert len(verdicts) == 9 * len(DUALITY_BASES)
        assert all(v.passed for v in verdicts), [v.diagram for v in verdicts if not v.passed]

    @pytest.mark.parametrize("mutated", [False, True])
    def test_object_duality_on_a_fixed_base(self, mutated):
        rng = make_rng(4)
        for field in (QQ, GF(5)):
            verdicts = suite_object_duality(rng, field, 3, bases=("divided_power:2",), mutated=mutated)
            assert all(v.passed for v in verdicts), [v.diagram for v in verdicts if not v.passed]


class TestAcceptancePlans:
    def test_object_duality_runs_per_base_in_halves(self):
        plans = acceptance_plans()
        object_duality = plans[[name for name, _ in SUITES].index("object_duality")]
        assert len(object_duality) == 2 * len(DUALITY_BASES)
        assert all(count == 250 for _, _, count in object_duality)
        assert object_duality[0][0] == "object_duality[grouplike:1]"
        assert object_duality[1][0] == "object_duality[grouplike:1, mutated]"

    def test_other_suites_use_the_acceptance_counts(self):
        plans = acceptance_plans()
        single = {plan[0][0]: plan[0][2] for plan in plans if len(plan) == 1}
        assert single == ACCEPTANCE_COUNTS

    def test_small_acceptance_run(self):
        report = run_acceptance(5, WorkbenchConfig(max_dim=3), per_base=4, counts={name: 1 for name, _ in SUITES})
        assert report.passed, [v for v in report.verdicts if v["verdict"] != "PASS"]
        assert len(report.verdicts) == 2 * len(DUALITY_BASES) + len(SUITES) - 1
        assert report.header["mode"] == "acceptance"
        assert all(v["instances"] == 2 for v in report.verdicts if v["suite"].startswith("object_duality["))
