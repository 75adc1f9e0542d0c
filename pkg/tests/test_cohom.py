"""Tests for mixed homomorphisms, the cohom functor and the cotensor-cohom adjunction."""

from itertools import product

import pytest

from coalgebra_workbench.cohom import (
    adjunction_check,
    cohom,
    cohom_map,
    cohom_space,
    is_contramodule_map,
    mixed_hom,
    mixed_hom_via_modules,
)
from coalgebra_workbench.comodules import (
    check_comodule,
    check_contramodule,
    direct_sum_comodules,
    regular_comodule,
)
from coalgebra_workbench.cotensor import (
    direct_sum_right_comodules,
    regular_bicomodule,
    regular_right_comodule,
)
from coalgebra_workbench.duality import comodule_to_contramodule
from coalgebra_workbench.errors import MismatchError, PreconditionError
from coalgebra_workbench.generators import (
    build_coalgebra,
    graded_comodule,
    graded_right_comodule,
    make_rng,
    mutate,
    random_bicomodule,
    random_comodule,
    random_right_comodule,
)
from coalgebra_workbench.matrix import Matrix
from coalgebra_workbench.modules import check_right_module, check_theta_module

SMALL_BASES = ["grouplike:1", "grouplike:2", "matrix_coalgebra:2", "divided_power:2"]


def _identity_block(rows: int, cols: int, field) -> Matrix:
    """The inclusion (rows > cols) or projection (rows < cols) onto the first summand."""
    return Matrix.from_function(rows, cols, lambda r, c: 1 if r == c else 0, field)


class TestMixedHom:
    @pytest.mark.parametrize("base", SMALL_BASES + ["trig", "divided_power:3"])
    @pytest.mark.parametrize("seed", range(3))
    def test_agrees_with_module_maps(self, base, seed, field):
        rng = make_rng(seed)
        d = build_coalgebra(base, field)
        n = comodule_to_contramodule(random_comodule(rng, d, 4))
        m = random_right_comodule(rng, d, 4)
        assert mixed_hom(n, m) == mixed_hom_via_modules(n, m)

    def test_graded_maps_preserve_degree(self):
        for a, b, c, d in product(range(3), repeat=4):
            n = comodule_to_contramodule(graded_comodule([a, b]))
            m = graded_right_comodule([c, d])
            assert mixed_hom(n, m).dim == a * c + b * d

    def test_uncertified_contramodule_is_refused(self, g2):
        n = comodule_to_contramodule(mutate(make_rng(1), graded_comodule([1, 1])))
        with pytest.raises(PreconditionError):
            mixed_hom(n, regular_right_comodule(g2))

    def test_bases_must_agree(self, g2, dp2):
        n = comodule_to_contramodule(graded_comodule([1, 1]))
        with pytest.raises(MismatchError):
            mixed_hom(n, regular_right_comodule(dp2))


class TestCohom:
    @pytest.mark.parametrize("base", SMALL_BASES)
    def test_regular_bicomodule_gives_back_the_argument(self, base, field):
        rng = make_rng(22)
        c = build_coalgebra(base, field)
        n = comodule_to_contramodule(random_comodule(rng, c, 4))
        h = cohom(regular_bicomodule(c), n)
        assert h.dim == n.dim
        assert check_contramodule(h).passed

    def test_every_stage_is_certified(self, m2, g2):
        rng = make_rng(23)
        b = random_bicomodule(rng, m2, g2, 4)
        n = comodule_to_contramodule(random_comodule(rng, g2, 3))
        space = cohom_space(b, n)
        assert check_right_module(space.right_module).passed
        assert check_theta_module(space.theta_module).passed
        assert check_comodule(space.comodule).passed
        assert check_contramodule(space.contramodule).passed
        assert len(space.basis_maps()) == space.dim
        for gamma in space.basis_maps():
            assert space.coordinates(gamma) is not None

    def test_uncertified_bicomodule_is_refused(self, dp2):
        broken = mutate(make_rng(24), regular_bicomodule(dp2))
        n = comodule_to_contramodule(random_comodule(make_rng(25), dp2, 3))
        with pytest.raises(PreconditionError):
            cohom(broken, n)

    def test_cohom_map_of_identity(self, dp2):
        n = comodule_to_contramodule(random_comodule(make_rng(26), dp2, 3))
        space = cohom_space(regular_bicomodule(dp2), n)
        identity = Matrix.identity(n.dim, n.field)
        assert cohom_map(space, space, identity) == Matrix.identity(space.dim, n.field)

    def test_cohom_map_is_covariant(self, field):
        rng = make_rng(27)
        c = build_coalgebra("grouplike:2", field)
        x = random_comodule(rng, c, 2)
        extra = random_comodule(rng, c, 2)
        n = comodule_to_contramodule(x)
        n2 = comodule_to_contramodule(direct_sum_comodules(x, extra))
        # dual of the inclusion X -> X ⊕ X'
        phi = _identity_block(x.dim, x.dim + extra.dim, field)
        assert is_contramodule_map(phi, n2, n)
        m = regular_bicomodule(c)
        source, target = cohom_space(m, n2), cohom_space(m, n)
        h_phi = cohom_map(source, target, phi)
        assert h_phi.shape == (target.dim, source.dim)
        assert is_contramodule_map(h_phi, source.contramodule, target.contramodule)

    def test_cohom_map_needs_a_homomorphism(self, dp2):
        n = comodule_to_contramodule(regular_comodule(dp2))
        space = cohom_space(regular_bicomodule(dp2), n)
        bad = Matrix.from_function(3, 3, lambda r, c: 1 if (r, c) == (0, 2) else 0)
        with pytest.raises(PreconditionError):
            cohom_map(space, space, bad)


class TestAdjunction:
    @pytest.mark.parametrize("seed", range(6))
    def test_isomorphism_and_naturality(self, seed, field):
        rng = make_rng(seed, 9)
        c = build_coalgebra(SMALL_BASES[seed % len(SMALL_BASES)], field)
        d = build_coalgebra(SMALL_BASES[(seed + 1) % len(SMALL_BASES)], field)
        l = random_right_comodule(rng, c, 3)
        m = random_bicomodule(rng, c, d, 3)
        x = random_comodule(rng, d, 3)
        n = comodule_to_contramodule(x)

        l_extra = random_right_comodule(rng, c, 2)
        l2 = direct_sum_right_comodules(l, l_extra)
        beta = _identity_block(l2.dim, l.dim, field)
        x_extra = random_comodule(rng, d, 2)
        n2 = comodule_to_contramodule(direct_sum_comodules(x, x_extra))
        phi = _identity_block(x.dim, x.dim + x_extra.dim, field)

        report = adjunction_check(l, m, n, l_maps=[(l2, beta)], n_maps=[(n2, phi)])
        assert report.passed, report.to_dict()
        assert report.lhs_dim == report.rhs_dim
        assert [v.diagram for v in report.verdicts] == [
            "dimension",
            "well_defined",
            "bijection",
            "naturality_L[0]",
            "naturality_N[0]",
        ]

    def test_regular_bicomodule(self, dp2):
        rng = make_rng(28)
        l = random_right_comodule(rng, dp2, 3)
        n = comodule_to_contramodule(random_comodule(rng, dp2, 3))
        report = adjunction_check(l, regular_bicomodule(dp2), n)
        assert report.passed
        assert report.to_dict()["verdict"] == "PASS"

    def test_non_homomorphism_is_refused(self, g2):
        l = graded_right_comodule([1, 1])
        m = regular_bicomodule(g2)
        n = comodule_to_contramodule(graded_comodule([1, 1]))
        swap = Matrix.from_rows([[0, 1], [1, 0]])
        with pytest.raises(PreconditionError):
            adjunction_check(l, m, n, l_maps=[(l, swap)])
