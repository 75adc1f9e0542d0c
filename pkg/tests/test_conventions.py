"""Tests for the tensor, Hom and dual coordinate conventions."""

from itertools import product

import pytest

from coalgebra_workbench.conventions import (
    hom_index,
    hom_solution_space,
    postcompose,
    precompose,
    psi,
    psi_bar,
    swap,
    tensor_index,
    unvec,
    vec,
)
from coalgebra_workbench.field import GF, QQ
from coalgebra_workbench.generators import make_rng, random_matrix
from coalgebra_workbench.linalg import Subspace
from coalgebra_workbench.matrix import Matrix, kron


class TestCoordinates:
    def test_indices(self):
        assert tensor_index(3, 1, 2) == 5
        assert hom_index(3, 2, 1) == 5

    def test_vec_stacks_columns(self):
        m = Matrix.from_rows([[1, 2], [3, 4]])
        assert vec(m) == Matrix.column_vector([1, 3, 2, 4])
        assert unvec(vec(m), 2, 2) == m

    def test_swap(self):
        s = swap(2, 3)
        for i, j in product(range(2), range(3)):
            source = Matrix.unit_vector(6, tensor_index(3, i, j))
            target = Matrix.unit_vector(6, tensor_index(2, j, i))
            assert s @ source == target
        assert swap(3, 2) @ s == Matrix.identity(6)


class TestComposition:
    def test_precompose_and_postcompose(self, field):
        rng = make_rng(11)
        f = random_matrix(rng, 3, 2, field)
        g = random_matrix(rng, 2, 4, field)
        h = random_matrix(rng, 5, 3, field)
        assert precompose(g, 3) @ vec(f) == vec(f @ g)
        assert postcompose(h, 2) @ vec(f) == vec(h @ f)


class TestPsi:
    def test_evaluation_identity_exhaustive(self):
        """ψ(γ)(e_i⊗e_j) = γ(e_i)(e_j) for every small shape."""
        rng = make_rng(3)
        for a, b, z in product(range(5), repeat=3):
            gamma = random_matrix(rng, b * z, a, QQ)
            image = unvec(psi(a, b, z) @ vec(gamma), z, a * b)
            for i, j, r in product(range(a), range(b), range(z)):
                assert image[r, tensor_index(b, i, j)] == gamma[hom_index(z, r, j), i]

    @pytest.mark.parametrize("dims", [(1, 1, 1), (2, 3, 2), (0, 2, 2), (3, 1, 2)])
    def test_psi_is_a_permutation(self, dims):
        assert psi(*dims).is_permutation()

    def test_naturality_in_the_first_argument(self, field):
        rng = make_rng(5)
        a, a2, b, z = 2, 3, 2, 2
        f = random_matrix(rng, a2, a, field)
        lhs = psi(a, b, z, field) @ precompose(f, b * z)
        rhs = precompose(kron(f, Matrix.identity(b, field)), z) @ psi(a2, b, z, field)
        assert lhs == rhs

    def test_naturality_in_the_target(self, field):
        rng = make_rng(6)
        a, b, z, z2 = 2, 2, 2, 3
        h = random_matrix(rng, z2, z, field)
        lhs = psi(a, b, z2, field) @ postcompose(postcompose(h, b), a)
        rhs = postcompose(h, a * b) @ psi(a, b, z, field)
        assert lhs == rhs


class TestPsiBar:
    @pytest.mark.parametrize("d, n, m", [(1, 1, 1), (2, 2, 1), (2, 1, 3), (3, 2, 2), (0, 2, 1)])
    def test_elementwise_formula(self, d, n, m):
        """ψ̄(G)(e_r) = Σ_i G(e_i*⊗e_r)⊗e_i."""
        rng = make_rng(d, n, m)
        g = random_matrix(rng, m, d * n, GF(5))
        image = unvec(psi_bar(d, n, m, GF(5)) @ vec(g), m * d, n)
        for s, i, r in product(range(m), range(d), range(n)):
            assert image[s * d + i, r] == g[s, i * n + r]

    def test_bijective(self):
        assert psi_bar(2, 3, 2).is_permutation()


class TestHomSolutionSpace:
    def test_commutant_of_a_diagonal_matrix(self):
        a = Matrix.from_rows([[1, 0], [0, 2]])
        space = hom_solution_space(lambda alpha: alpha @ a - a @ alpha, 2, 2)
        assert space.dim == 2
        assert space.contains(vec(Matrix.identity(2)))
        assert space.contains(vec(Matrix.from_rows([[1, 0], [0, 0]])))

    def test_intertwiners_of_scalars_are_everything(self):
        a = Matrix.identity(2, GF(3)) + Matrix.identity(2, GF(3))
        b = Matrix.identity(3, GF(3)) + Matrix.identity(3, GF(3))
        space = hom_solution_space(lambda alpha: alpha @ a - b @ alpha, 3, 2, GF(3))
        assert space.ambient_dim == 6
        assert space.dim == 6

    def test_empty_hom_space(self):
        space = hom_solution_space(lambda alpha: alpha, 0, 3)
        assert space.dim == 0

    def test_no_equations_leave_the_whole_space(self):
        space = hom_solution_space(lambda alpha: Matrix.zeros(0, 0, GF(5)), 2, 2, GF(5))
        assert space == Subspace.full(4, GF(5))
        assert space.dim == 4
