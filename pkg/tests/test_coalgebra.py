"""Tests for coalgebras, algebras and the standard examples."""

import pytest

from coalgebra_workbench.coalgebra import (
    Coalgebra,
    check_algebra,
    check_coalgebra,
    commutativity_witness,
    direct_sum,
    divided_power,
    dual_algebra,
    dual_coalgebra,
    grouplike,
    is_dual_pair,
    matrix_coalgebra,
    trig,
)
from coalgebra_workbench.errors import PreconditionError, StructuralError, UnsupportedFieldError
from coalgebra_workbench.field import GF, QQ
from coalgebra_workbench.generators import build_coalgebra, make_rng, random_coalgebra
from coalgebra_workbench.matrix import Matrix

from .conftest import BUILDER_NAMES


class TestBuilders:
    @pytest.mark.parametrize("base", BUILDER_NAMES)
    def test_builders_certify(self, base, field):
        c = build_coalgebra(base, field)
        report = check_coalgebra(c)
        assert report.passed, report.to_dict()
        assert [v.diagram for v in report.verdicts] == ["coassociativity", "counit"]

    def test_dimensions(self):
        assert grouplike(3).dim == 3
        assert matrix_coalgebra(2).dim == 4
        assert divided_power(2).dim == 3
        assert divided_power(0).dim == 1
        assert trig().dim == 2

    def test_divided_power_coproduct(self, dp2):
        # Δ(c_2) = c_0⊗c_2 + c_1⊗c_1 + c_2⊗c_0
        assert dp2.delta.column(2) == (0, 0, 1, 0, 1, 0, 1, 0, 0)

    def test_trig_needs_odd_characteristic(self):
        with pytest.raises(UnsupportedFieldError):
            trig(GF(2))
        assert check_coalgebra(trig(GF(3))).passed

    def test_zero_dimensional_coalgebra(self):
        assert check_coalgebra(grouplike(0)).passed

    def test_shapes_are_validated(self):
        with pytest.raises(StructuralError):
            Coalgebra(2, Matrix.zeros(3, 2), Matrix.zeros(1, 2))

    def test_direct_sum(self, g2, dp2):
        c = direct_sum(g2, dp2)
        assert c.dim == 5
        assert check_coalgebra(c).passed

    def test_conjugated_coalgebra_certifies(self, field):
        c = random_coalgebra(make_rng(4), matrix_coalgebra(2, field))
        assert check_coalgebra(c).passed


class TestCertificates:
    def test_broken_counit_names_the_basis_vector(self, g2):
        broken = Coalgebra(2, g2.delta, Matrix.from_rows([[2, 1]]))
        report = check_coalgebra(broken)
        assert report.verdict("coassociativity").passed
        counit = report.verdict("counit")
        assert not counit.passed
        assert counit.witness.basis_index == 0
        assert counit.witness.left == (2, 0, 2, 0)
        assert counit.witness.right == (1, 0, 1, 0)

    def test_broken_coassociativity(self, dp2):
        entries = list(dp2.delta.entries)
        entries[2 * 3 + 2] = 5
        broken = Coalgebra(3, Matrix(9, 3, tuple(entries)), dp2.eps)
        assert not check_coalgebra(broken).passed

    def test_report_serializes(self, g2):
        data = check_coalgebra(g2).to_dict()
        assert data["verdict"] == "PASS"
        assert [d["diagram"] for d in data["diagrams"]] == ["coassociativity", "counit"]


class TestDuals:
    @pytest.mark.parametrize("base", BUILDER_NAMES)
    def test_dual_algebra_certifies_and_round_trips(self, base, field):
        c = build_coalgebra(base, field)
        a = dual_algebra(c)
        assert check_algebra(a).passed
        assert is_dual_pair(a, c)
        assert dual_coalgebra(a) == c

    def test_dual_of_broken_coalgebra_is_refused(self, g2):
        broken = Coalgebra(2, g2.delta, Matrix.from_rows([[2, 1]]))
        with pytest.raises(PreconditionError):
            dual_algebra(broken)

    def test_commutativity(self, g2, m2):
        assert commutativity_witness(dual_algebra(g2)) is None
        assert commutativity_witness(dual_algebra(divided_power(3))) is None
        witness = commutativity_witness(dual_algebra(m2))
        assert witness is not None
        i, j = witness
        assert 0 <= i < 4 and 0 <= j < 4

    def test_labels_do_not_affect_equality(self):
        assert grouplike(2) == Coalgebra(2, grouplike(2).delta, grouplike(2).eps, label="other")

    def test_fields_are_kept(self):
        assert dual_algebra(grouplike(2, GF(5))).field == GF(5)
        assert dual_algebra(grouplike(2)).field == QQ
