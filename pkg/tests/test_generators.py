"""Tests for seeded random structures and mutations."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coalgebra_workbench.comodules import check_comodule
from coalgebra_workbench.errors import PreconditionError, StructuralError
from coalgebra_workbench.field import GF, QQ
from coalgebra_workbench.generators import (
    RANDOM_KINDS,
    build_coalgebra,
    graded_comodule,
    make_rng,
    mutate,
    random_element,
    random_invertible,
    random_structure,
    random_tower,
    zero_comodule,
)
from coalgebra_workbench.linalg import rank
from coalgebra_workbench.serialization import check_structure, emit_document

SEEDS = st.integers(0, 2**32 - 1)


class TestRandomness:
    def test_same_seed_same_draws(self):
        first = [random_element(make_rng(5, 1), QQ) for _ in range(3)]
        second = [random_element(make_rng(5, 1), QQ) for _ in range(3)]
        assert first == second

    def test_structures_are_reproducible(self, m2):
        a = random_structure(make_rng(40), "bicomodule", m2, max_dim=4)
        b = random_structure(make_rng(40), "bicomodule", m2, max_dim=4)
        assert emit_document(a) == emit_document(b)

    def test_prime_field_elements_are_in_range(self):
        rng = make_rng(41)
        assert all(0 <= random_element(rng, GF(7)) < 7 for _ in range(50))

    @pytest.mark.parametrize("n", [0, 1, 4])
    def test_random_invertible(self, n, field):
        assert rank(random_invertible(make_rng(n), n, field)) == n


class TestBuilders:
    def test_unknown_builder_gets_suggestions(self):
        with pytest.raises(StructuralError) as excinfo:
            build_coalgebra("grouplke:2")
        assert "grouplike" in excinfo.value.details["suggestions"]

    def test_missing_size(self):
        with pytest.raises(StructuralError):
            build_coalgebra("divided_power")

    def test_names_are_normalized(self):
        assert build_coalgebra("Divided-Power:1").dim == 2
        assert build_coalgebra("trig", GF(3)).field == GF(3)


class TestRandomStructures:
    @settings(max_examples=30, deadline=None)
    @given(seed=SEEDS, kind=st.sampled_from(RANDOM_KINDS), field=st.sampled_from([QQ, GF(5)]))
    def test_generated_structures_certify(self, seed, kind, field):
        c = build_coalgebra("matrix_coalgebra:2", field)
        structure = random_structure(make_rng(seed), kind, c, max_dim=4)
        assert check_structure(structure).passed

    @settings(max_examples=20, deadline=None)
    @given(seed=SEEDS)
    def test_random_comodules_respect_max_dim(self, seed):
        c = build_coalgebra("divided_power:3")
        assert random_structure(make_rng(seed), "comodule", c, max_dim=3).dim <= 3

    def test_tower_transitions_are_surjective(self, g2):
        t = random_tower(make_rng(42), g2, 3, 5)
        assert t.height == 3
        for i, f in enumerate(t.transitions):
            assert rank(f) == t.levels[i].dim

    def test_unknown_kind(self, g2):
        with pytest.raises(StructuralError):
            random_structure(make_rng(0), "sheaf", g2)


class TestMutation:
    @settings(max_examples=30, deadline=None)
    @given(seed=SEEDS, kind=st.sampled_from(RANDOM_KINDS))
    def test_mutation_breaks_the_certificate(self, seed, kind):
        rng = make_rng(seed)
        structure = random_structure(rng, kind, build_coalgebra("divided_power:2"), max_dim=3)
        try:
            broken = mutate(rng, structure)
        except PreconditionError:
            return
        failures = check_structure(broken).failures
        assert failures
        assert all(v.witness is not None for v in failures)

    def test_empty_structure_cannot_be_mutated(self, g2):
        with pytest.raises(PreconditionError):
            mutate(make_rng(0), zero_comodule(g2))

    def test_custom_certifier(self):
        broken = mutate(make_rng(43), graded_comodule([1, 1]), check_comodule)
        assert not check_comodule(broken).passed
