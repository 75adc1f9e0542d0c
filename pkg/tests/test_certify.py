"""Tests for certificates, report models and error reports."""

import pytest

from coalgebra_workbench.certify import certificate, compare_composites, compare_stacked
from coalgebra_workbench.errors import (
    FieldElementError,
    InvariantError,
    MismatchError,
    StructuralError,
    UnsupportedFieldError,
    validate_prime,
)
from coalgebra_workbench.field import GF
from coalgebra_workbench.matrix import Matrix
from coalgebra_workbench.models import CertReport, DiagramVerdict, Report


class TestCompareComposites:
    def test_equal_composites_pass(self):
        m = Matrix.from_rows([[1, 2], [3, 4]])
        verdict = compare_composites("square", m, m)
        assert verdict.passed
        assert verdict.witness is None
        assert verdict.to_dict() == {"diagram": "square", "verdict": "PASS"}

    def test_witness_is_the_first_differing_column(self):
        left = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        right = Matrix.from_rows([[1, 0, 3], [4, 5, 0]])
        verdict = compare_composites("square", left, right)
        assert not verdict.passed
        assert verdict.witness.basis_index == 1
        assert verdict.to_dict()["witness"] == {"basis_index": 1, "left": ["2", "5"], "right": ["0", "5"]}

    def test_prime_field_witness_entries_stay_ints(self):
        left = Matrix.from_rows([[1]], GF(3))
        right = Matrix.from_rows([[2]], GF(3))
        assert compare_composites("d", left, right).to_dict()["witness"]["left"] == [1]

    def test_shape_mismatch_is_an_invariant_error(self):
        with pytest.raises(InvariantError):
            compare_composites("square", Matrix.zeros(2, 1), Matrix.zeros(1, 2))

    def test_stacked(self):
        a = Matrix.from_rows([[1, 0]])
        b = Matrix.from_rows([[0, 1]])
        assert compare_stacked("pair", [a, b], [a, b]).passed
        assert compare_stacked("pair", [a, b], [a, a]).witness.basis_index == 0


class TestCertReport:
    def test_verdicts_stay_separate(self):
        report = certificate("comodule", DiagramVerdict("square", True), DiagramVerdict("triangle", False))
        assert not report.passed
        assert [v.diagram for v in report.failures] == ["triangle"]
        assert report.outcome() == {"square": True, "triangle": False}
        assert report.verdict("square").passed
        assert report.to_dict()["verdict"] == "FAIL"

    def test_unknown_diagram(self):
        with pytest.raises(KeyError):
            CertReport("coalgebra", ()).verdict("counit")

    def test_empty_report_passes(self):
        assert CertReport("zero", ()).passed


class TestReport:
    def test_timing_only_when_recorded(self):
        report = Report(command="check")
        report.add(certificate("coalgebra", DiagramVerdict("counit", True)))
        assert "timing" not in report.to_dict()
        report.timing["certify"] = 0.1234567
        assert report.to_dict()["timing"] == {"certify": 0.123457}

    def test_any_failure_fails_the_report(self):
        report = Report(command="cotensor")
        report.add(certificate("a", DiagramVerdict("x", True)))
        report.add(certificate("b", DiagramVerdict("y", False)))
        assert report.to_dict()["verdict"] == "FAIL"


class TestErrors:
    def test_structural_error_report_carries_the_field(self):
        report = StructuralError("bad shape", field="rho").to_report()
        assert report.to_dict() == {
            "error_type": "structural",
            "message": "bad shape",
            "exit_code": 2,
            "location": "rho",
        }

    def test_subclasses_keep_their_type(self):
        assert MismatchError("x").to_report().error_type == "mismatch"
        assert isinstance(UnsupportedFieldError("x"), StructuralError)

    def test_parse_error_message_has_the_location(self):
        error = FieldElementError("5 is not in GF(3)", location="$.eps[0][0]", details={"value": 5})
        assert str(error) == "$.eps[0][0]: 5 is not in GF(3)"
        assert error.reason == "5 is not in GF(3)"
        assert error.to_report().to_dict()["details"] == {"value": 5}

    @pytest.mark.parametrize("value", [2, 5, 101])
    def test_primes_are_accepted(self, value):
        validate_prime(value, "p")

    @pytest.mark.parametrize("value", [0, 1, 4, -3, True, "5"])
    def test_non_primes_are_rejected(self, value):
        with pytest.raises(UnsupportedFieldError):
            validate_prime(value, "p")
