"""Seeded random structures and single-entry mutations.

Valid structures are never sampled directly: they are assembled from pieces
that satisfy the axioms by construction (cyclic subcomodules of C, graded
comodules, tensor products) and then conjugated by a random invertible matrix.
Every draw comes from a numpy PCG64 stream, so a seed fixes the output.
"""

import logging
from dataclasses import replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .coalgebra import (
    Coalgebra,
    convolution_algebra,
    divided_power,
    grouplike,
    matrix_coalgebra,
    trig,
)
from .comodules import (
    Comodule,
    Contramodule,
    conjugate_comodule,
    conjugate_contramodule,
    cyclic_subcomodule,
    direct_sum_comodules,
    regular_comodule,
    restrict_comodule,
)
from .cotensor import (
    Bicomodule,
    RightComodule,
    conjugate_bicomodule,
    conjugate_right_comodule,
    cyclic_right_subcomodule,
    direct_sum_bicomodules,
    direct_sum_right_comodules,
    regular_bicomodule,
    regular_right_comodule,
    restrict_right_comodule,
    tensor_bicomodule,
)
from .duality import comodule_to_contramodule, comodule_to_pcmodule, contramodule_to_dmodule
from .errors import InvariantError, PreconditionError, StructuralError, validate_dimension
from .field import QQ, Element, FieldSpec
from .linalg import inverse
from .matrix import Matrix, dual_map, kron
from .resolver import NameResolver
from .serialization import check_structure
from .towers import FiniteTower

logger = logging.getLogger(__name__)

PRNG_NAME = "numpy.random.PCG64"

MUTATION_ATTEMPTS = 64


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """A PCG64 generator for ``seed``; ``stream`` picks an independent substream."""
    return np.random.default_rng([int(seed), *(int(s) for s in stream)])


# ============================================================================
# Scalars and matrices
# ============================================================================

def random_element(rng: np.random.Generator, field: FieldSpec) -> Element:
    """Small numerators over denominators 1 or 2 for Q, uniform over GF(p)."""
    if field.is_prime_field:
        return int(rng.integers(0, field.characteristic))
    return Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3)))


def random_nonzero(rng: np.random.Generator, field: FieldSpec) -> Element:
    while True:
        value = random_element(rng, field)
        if value != 0:
            return value


def random_matrix(rng: np.random.Generator, rows: int, cols: int, field: FieldSpec = QQ) -> Matrix:
    return Matrix(rows, cols, tuple(random_element(rng, field) for _ in range(rows * cols)), field)


def random_vector(rng: np.random.Generator, n: int, field: FieldSpec = QQ) -> List[Element]:
    """Half the time a basis vector, otherwise a dense random vector."""
    if n and rng.random() < 0.5:
        index = int(rng.integers(0, n))
        return [1 if i == index else 0 for i in range(n)]
    return [random_element(rng, field) for _ in range(n)]


def random_invertible(rng: np.random.Generator, n: int, field: FieldSpec = QQ) -> Matrix:
    """A product of a unit lower and a unit upper triangular matrix."""
    lower = Matrix.from_function(
        n, n, lambda i, j: 1 if i == j else (random_element(rng, field) if i > j else 0), field
    )
    upper = Matrix.from_function(
        n, n, lambda i, j: 1 if i == j else (random_element(rng, field) if i < j else 0), field
    )
    return lower @ upper


# ============================================================================
# Base coalgebras
# ============================================================================

BUILDERS: Dict[str, Callable[[Optional[int], FieldSpec], Coalgebra]] = {
    "grouplike": lambda n, field: grouplike(n, field),
    "matrix_coalgebra": lambda n, field: matrix_coalgebra(n, field),
    "divided_power": lambda n, field: divided_power(n, field),
    "trig": lambda n, field: trig(field),
}

builder_resolver = NameResolver(list(BUILDERS))


def build_coalgebra(base: str, field: FieldSpec = QQ) -> Coalgebra:
    """Build a standard coalgebra from ``name`` or ``name:arg`` (``grouplike:2``, ``trig``).

    Raises:
        StructuralError: If the name is unknown (with suggestions) or the argument is missing
    """
    name, _, arg = base.partition(":")
    found = builder_resolver.exact(name)
    if found is None:
        suggestions = builder_resolver.suggestions(name)
        hint = f"; did you mean {', '.join(suggestions)}?" if suggestions else ""
        raise StructuralError(
            f"unknown coalgebra {name!r}{hint}",
            field="base",
            details={"suggestions": suggestions, "builders": list(BUILDERS)},
        )
    if found == "trig":
        return BUILDERS[found](None, field)
    if not arg.strip().isdigit():
        raise StructuralError(f"{found} needs a size, e.g. {found}:2", field="base", details={"value": base})
    return BUILDERS[found](int(arg), field)


def conjugate_coalgebra(c: Coalgebra, p: Matrix) -> Coalgebra:
    """Δ' = (P⊗P) Δ P⁻¹, ε' = ε P⁻¹."""
    p_inv = inverse(p)
    return Coalgebra(c.dim, kron(p, p) @ c.delta @ p_inv, c.eps @ p_inv, label=c.label)


def random_coalgebra(rng: np.random.Generator, c: Coalgebra) -> Coalgebra:
    return conjugate_coalgebra(c, random_invertible(rng, c.dim, c.field))


# ============================================================================
# Comodules
# ============================================================================

def zero_comodule(c: Coalgebra) -> Comodule:
    return Comodule(c, 0, Matrix.zeros(0, 0, c.field))


def graded_comodule(dims: Sequence[int], field: FieldSpec = QQ) -> Comodule:
    """⊕ k^{dims[i]} over grouplike(len(dims)), with ρ(x) = e_i⊗x in degree i."""
    for i, d in enumerate(dims):
        validate_dimension(d, f"dims[{i}]")
    c = grouplike(len(dims), field)
    total = sum(dims)
    degree = [i for i, d in enumerate(dims) for _ in range(d)]
    rho = Matrix.from_function(c.dim * total, total, lambda r, col: 1 if r == degree[col] * total + col else 0, field)
    return Comodule(c, total, rho)


def graded_right_comodule(dims: Sequence[int], field: FieldSpec = QQ) -> RightComodule:
    """The mirror of :func:`graded_comodule`: μ(x) = x⊗e_i in degree i."""
    for i, d in enumerate(dims):
        validate_dimension(d, f"dims[{i}]")
    c = grouplike(len(dims), field)
    n, total = c.dim, sum(dims)
    degree = [i for i, d in enumerate(dims) for _ in range(d)]
    mu = Matrix.from_function(total * n, total, lambda r, col: 1 if r == col * n + degree[col] else 0, field)
    return RightComodule(c, total, mu)


def random_comodule(rng: np.random.Generator, c: Coalgebra, max_dim: int, conjugate: bool = True) -> Comodule:
    """A direct sum of cyclic subcomodules of (C, Δ), conjugated at random.

    The dimension is at most ``max_dim``; it can be 0 when no cyclic piece fits.
    """
    target = int(rng.integers(1, max_dim + 1)) if max_dim > 0 else 0
    regular = regular_comodule(c)
    result = zero_comodule(c)
    for _ in range(8):
        if result.dim >= target or c.dim == 0:
            break
        space = cyclic_subcomodule(regular, random_vector(rng, c.dim, c.field))
        if space.dim == 0 or result.dim + space.dim > target:
            continue
        result = direct_sum_comodules(result, restrict_comodule(regular, space))
    if conjugate:
        result = conjugate_comodule(result, random_invertible(rng, result.dim, c.field))
    logger.debug(f"random comodule of dimension {result.dim} over {c}")
    return result


def zero_right_comodule(c: Coalgebra) -> RightComodule:
    return RightComodule(c, 0, Matrix.zeros(0, 0, c.field))


def random_right_comodule(
    rng: np.random.Generator, c: Coalgebra, max_dim: int, conjugate: bool = True
) -> RightComodule:
    """The right-handed counterpart of :func:`random_comodule`."""
    target = int(rng.integers(1, max_dim + 1)) if max_dim > 0 else 0
    regular = regular_right_comodule(c)
    result = zero_right_comodule(c)
    for _ in range(8):
        if result.dim >= target or c.dim == 0:
            break
        space = cyclic_right_subcomodule(regular, random_vector(rng, c.dim, c.field))
        if space.dim == 0 or result.dim + space.dim > target:
            continue
        result = direct_sum_right_comodules(result, restrict_right_comodule(regular, space))
    if conjugate:
        result = conjugate_right_comodule(result, random_invertible(rng, result.dim, c.field))
    logger.debug(f"random right comodule of dimension {result.dim} over {c}")
    return result


def random_contramodule(rng: np.random.Generator, c: Coalgebra, max_dim: int) -> Contramodule:
    """The dual of a random comodule, transported along a random change of basis."""
    z = comodule_to_contramodule(random_comodule(rng, c, max_dim))
    return conjugate_contramodule(z, random_invertible(rng, z.dim, c.field))


def zero_bicomodule(c: Coalgebra, d: Coalgebra) -> Bicomodule:
    return Bicomodule(c, d, 0, Matrix.zeros(0, 0, c.field), Matrix.zeros(0, 0, c.field))


def random_bicomodule(rng: np.random.Generator, c: Coalgebra, d: Coalgebra, max_dim: int) -> Bicomodule:
    """Sums of X⊗Y (X a left C-, Y a right D-comodule) and, when C = D, copies of C.

    None of these need to be quasi-finite in any sense; the sum is conjugated
    as a whole so that λ and μ are not block diagonal.
    """
    target = int(rng.integers(1, max_dim + 1)) if max_dim > 0 else 0
    result = zero_bicomodule(c, d)
    for _ in range(8):
        remaining = target - result.dim
        if remaining <= 0:
            break
        if c == d and 0 < c.dim <= remaining and rng.random() < 0.3:
            piece = regular_bicomodule(c)
        else:
            x = random_comodule(rng, c, remaining)
            if x.dim == 0:
                continue
            y = random_right_comodule(rng, d, remaining // x.dim)
            if y.dim == 0:
                continue
            piece = tensor_bicomodule(x, y)
        result = direct_sum_bicomodules(result, piece)
    result = conjugate_bicomodule(result, random_invertible(rng, result.dim, c.field))
    logger.debug(f"random bicomodule of dimension {result.dim}")
    return result


def random_tower(rng: np.random.Generator, c: Coalgebra, height: int, max_dim: int) -> FiniteTower:
    """Z_0 <- ... <- Z_height with surjective transitions.

    Comodules X_{i+1} = X_i ⊕ Y_i are conjugated level by level and dualized;
    the transitions are the duals of the inclusions X_i -> X_{i+1}, so the
    limit is isomorphic to the top level.
    """
    validate_dimension(height, "height")
    f = c.field
    levels = [random_comodule(rng, c, max_dim, conjugate=False)]
    inclusions = []
    for _ in range(height):
        lower = levels[-1]
        extra = random_comodule(rng, c, max(0, max_dim - lower.dim), conjugate=False)
        levels.append(direct_sum_comodules(lower, extra))
        inclusions.append(
            Matrix.from_function(lower.dim + extra.dim, lower.dim, lambda r, col: 1 if r == col else 0, f)
        )
    changes = [random_invertible(rng, x.dim, f) for x in levels]
    conjugated = [conjugate_comodule(x, p) for x, p in zip(levels, changes)]
    transitions = [
        dual_map(changes[i + 1] @ inclusions[i] @ inverse(changes[i])) for i in range(height)
    ]
    return FiniteTower(c, tuple(comodule_to_contramodule(x) for x in conjugated), tuple(transitions))


RANDOM_KINDS = (
    "coalgebra",
    "algebra",
    "comodule",
    "right_comodule",
    "contramodule",
    "left_module",
    "right_module",
    "bicomodule",
    "tower",
)


def random_structure(
    rng: np.random.Generator,
    kind: str,
    c: Coalgebra,
    d: Optional[Coalgebra] = None,
    max_dim: int = 6,
    height: int = 2,
):
    """A certified random structure of ``kind`` over ``c`` (and ``d`` for bicomodules).

    Modules come out over C* through the duality functors.
    """
    if kind == "coalgebra":
        return random_coalgebra(rng, c)
    if kind == "algebra":
        return convolution_algebra(random_coalgebra(rng, c))
    if kind == "comodule":
        return random_comodule(rng, c, max_dim)
    if kind == "right_comodule":
        return random_right_comodule(rng, c, max_dim)
    if kind == "contramodule":
        return random_contramodule(rng, c, max_dim)
    if kind == "left_module":
        return comodule_to_pcmodule(random_comodule(rng, c, max_dim))
    if kind == "right_module":
        return contramodule_to_dmodule(random_contramodule(rng, c, max_dim))
    if kind == "bicomodule":
        return random_bicomodule(rng, c, d if d is not None else c, max_dim)
    if kind == "tower":
        return random_tower(rng, c, height, max_dim)
    raise StructuralError(f"cannot generate a {kind!r}", field="kind", details={"kinds": list(RANDOM_KINDS)})


# ============================================================================
# Mutation
# ============================================================================

def _structure_matrices(structure) -> Dict[str, Matrix]:
    """The structure matrices a mutation may touch, keyed by attribute name."""
    if isinstance(structure, Coalgebra):
        return {"delta": structure.delta, "eps": structure.eps}
    if isinstance(structure, FiniteTower):
        found = {f"levels[{i}]": z.theta for i, z in enumerate(structure.levels)}
        found.update({f"transitions[{i}]": t for i, t in enumerate(structure.transitions)})
        return found
    if isinstance(structure, Bicomodule):
        return {"lam": structure.lam, "mu": structure.mu}
    for name in ("mult", "rho", "mu", "theta", "action"):
        if hasattr(structure, name):
            found = {name: getattr(structure, name)}
            if name == "mult":
                found["unit"] = structure.unit
            return found
    raise StructuralError(f"cannot mutate a {type(structure).__name__}", field="structure")


def _bump(m: Matrix, index: int, delta: Element) -> Matrix:
    entries = list(m.entries)
    entries[index] = entries[index] + delta
    return Matrix(m.rows, m.cols, tuple(entries), m.field)


def _replace_matrix(structure, name: str, value: Matrix):
    if isinstance(structure, FiniteTower):
        position = int(name[name.index("[") + 1:-1])
        if name.startswith("levels"):
            levels = list(structure.levels)
            levels[position] = replace(levels[position], theta=value)
            return replace(structure, levels=tuple(levels))
        transitions = list(structure.transitions)
        transitions[position] = value
        return replace(structure, transitions=tuple(transitions))
    return replace(structure, **{name: value})


def mutate(rng: np.random.Generator, structure, check: Optional[Callable] = None):
    """Add a random nonzero scalar to one entry of a structure matrix until the certifier fails.

    Args:
        rng: Random stream
        structure: A structure with at least one matrix entry
        check: Certifier; defaults to the one matching the structure's kind

    Raises:
        PreconditionError: If there is no entry to mutate
        InvariantError: If no failing mutation turned up
    """
    check = check or check_structure
    candidates = [(name, m) for name, m in _structure_matrices(structure).items() if m.entries]
    if not candidates:
        raise PreconditionError("cannot mutate a structure without entries", details={"dim": 0})
    for attempt in range(MUTATION_ATTEMPTS):
        name, m = candidates[int(rng.integers(0, len(candidates)))]
        index = int(rng.integers(0, len(m.entries)))
        mutated = _replace_matrix(structure, name, _bump(m, index, random_nonzero(rng, m.field)))
        if not check(mutated).passed:
            logger.debug(f"mutation of {name}[{index}] fails after {attempt + 1} attempts")
            return mutated
    raise InvariantError("no failing single-entry mutation found", details={"attempts": MUTATION_ATTEMPTS})
