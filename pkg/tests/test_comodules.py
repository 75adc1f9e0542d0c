"""Tests for left comodules and right contramodules."""

import pytest

from coalgebra_workbench.comodules import (
    Comodule,
    Contramodule,
    check_comodule,
    check_contramodule,
    conjugate_comodule,
    conjugate_contramodule,
    cyclic_subcomodule,
    direct_sum_comodules,
    hom_comodules,
    hom_contramodules,
    regular_comodule,
    restrict_comodule,
)
from coalgebra_workbench.duality import comodule_to_contramodule
from coalgebra_workbench.errors import MismatchError, StructuralError
from coalgebra_workbench.generators import (
    build_coalgebra,
    graded_comodule,
    make_rng,
    mutate,
    random_comodule,
    random_invertible,
)
from coalgebra_workbench.linalg import Subspace
from coalgebra_workbench.matrix import Matrix

from .conftest import BUILDER_NAMES


class TestComodules:
    @pytest.mark.parametrize("base", BUILDER_NAMES)
    def test_regular_comodule(self, base, field):
        c = build_coalgebra(base, field)
        x = regular_comodule(c)
        assert check_comodule(x).passed
        # End_C(C) ≅ C*
        assert hom_comodules(x, x).dim == c.dim

    def test_graded_comodule(self):
        x = graded_comodule([2, 1])
        assert x.over.dim == 2
        assert x.dim == 3
        assert check_comodule(x).passed

    def test_hom_between_graded_comodules(self):
        # maps preserve degree: Hom = ⊕ Hom(k^a_i, k^b_i)
        x = graded_comodule([2, 1])
        y = graded_comodule([1, 3])
        assert hom_comodules(x, y).dim == 2 * 1 + 1 * 3

    def test_conjugation_preserves_everything(self, field):
        rng = make_rng(8)
        x = graded_comodule([1, 2], field)
        y = conjugate_comodule(x, random_invertible(rng, 3, field))
        assert check_comodule(y).passed
        assert hom_comodules(y, y).dim == hom_comodules(x, x).dim

    def test_direct_sum(self, dp2):
        x = regular_comodule(dp2)
        total = direct_sum_comodules(x, x)
        assert total.dim == 6
        assert check_comodule(total).passed
        assert hom_comodules(total, total).dim == 4 * 3

    def test_cyclic_subcomodule(self, dp2):
        # Δ(c_1) = c_0⊗c_1 + c_1⊗c_0 generates span{c_0, c_1}
        space = cyclic_subcomodule(regular_comodule(dp2), [0, 1, 0])
        assert space == Subspace.spanned_by([[1, 0, 0], [0, 1, 0]], 3)
        sub = restrict_comodule(regular_comodule(dp2), space)
        assert sub.dim == 2
        assert check_comodule(sub).passed

    def test_restrict_to_non_subcomodule(self, dp2):
        with pytest.raises(StructuralError):
            restrict_comodule(regular_comodule(dp2), Subspace.spanned_by([[0, 0, 1]], 3))

    def test_broken_triangle(self):
        broken = Comodule(build_coalgebra("grouplike:1"), 1, Matrix.from_rows([[2]]))
        report = check_comodule(broken)
        triangle = report.verdict("triangle")
        assert not triangle.passed
        assert triangle.witness.basis_index == 0
        assert triangle.witness.left == (2,)
        assert triangle.witness.right == (1,)

    def test_shape_is_validated(self, g2):
        with pytest.raises(StructuralError):
            Comodule(g2, 2, Matrix.zeros(2, 2))

    def test_bases_must_agree(self, g2, dp2):
        with pytest.raises(MismatchError):
            hom_comodules(regular_comodule(g2), regular_comodule(dp2))

    def test_random_comodules_certify(self, field):
        c = build_coalgebra("matrix_coalgebra:2", field)
        for seed in range(5):
            x = random_comodule(make_rng(seed), c, 5)
            assert x.dim <= 5
            assert check_comodule(x).passed


class TestContramodules:
    def test_graded_dual_is_coordinate_projection(self):
        """Over grouplike(2) with one basis vector in each degree, θ reads F[0,0] and F[1,1]."""
        z = comodule_to_contramodule(graded_comodule([1, 1]))
        assert z.theta == Matrix.from_rows([[1, 0, 0, 0], [0, 0, 0, 1]])
        assert check_contramodule(z).passed

    def test_broken_theta_fails(self):
        z = comodule_to_contramodule(graded_comodule([1, 1]))
        broken = Contramodule(z.over, 2, Matrix.from_rows([[1, 0, 0, 0], [0, 0, 1, 1]]))
        assert not check_contramodule(broken).passed

    def test_mutation_is_detected(self, m2):
        rng = make_rng(2)
        z = comodule_to_contramodule(random_comodule(rng, m2, 4))
        if z.dim == 0:
            pytest.skip("empty draw")
        broken = mutate(rng, z)
        assert not check_contramodule(broken).passed

    def test_hom_contramodules_matches_hom_comodules(self, field):
        rng = make_rng(21)
        c = build_coalgebra("divided_power:2", field)
        x = random_comodule(rng, c, 4)
        y = random_comodule(rng, c, 4)
        hom_x_y = hom_comodules(x, y)
        hom_dual = hom_contramodules(comodule_to_contramodule(y), comodule_to_contramodule(x))
        assert hom_dual.dim == hom_x_y.dim

    def test_conjugation(self, field):
        rng = make_rng(9)
        z = comodule_to_contramodule(graded_comodule([2, 1], field))
        w = conjugate_contramodule(z, random_invertible(rng, 3, field))
        assert check_contramodule(w).passed
        assert hom_contramodules(w, z).dim == hom_contramodules(z, z).dim
