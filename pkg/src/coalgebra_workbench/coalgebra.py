"""Coalgebras, algebras, their certifiers and the standard examples."""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .certify import certificate, compare_composites, compare_stacked
from .conventions import swap
from .errors import PreconditionError, UnsupportedFieldError, validate_dimension, validate_same_field, validate_shape
from .field import QQ, FieldSpec
from .matrix import Matrix, dual_map, hstack, kron
from .models import CertReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coalgebra:
    """A finite-dimensional coalgebra (C, Δ, ε).

    Attributes:
        dim: n = dim C
        delta: Δ: C -> C⊗C, an n²×n matrix
        eps: ε: C -> k, a 1×n matrix
        label: Display name; ignored by equality
    """

    dim: int
    delta: Matrix
    eps: Matrix
    label: str = field(default="", compare=False)

    def __post_init__(self):
        validate_dimension(self.dim, "dim")
        validate_shape(self.delta, self.dim * self.dim, self.dim, "delta")
        validate_shape(self.eps, 1, self.dim, "eps")
        validate_same_field(self.delta, self.eps, "eps")

    @property
    def field(self) -> FieldSpec:
        return self.delta.field

    @property
    def identity(self) -> Matrix:
        return Matrix.identity(self.dim, self.field)

    def __str__(self) -> str:
        return self.label or f"coalgebra of dimension {self.dim} over {self.field.label}"


@dataclass(frozen=True)
class Algebra:
    """A finite-dimensional unital associative algebra (A, m, u).

    Attributes:
        dim: n = dim A
        mult: m: A⊗A -> A, an n×n² matrix
        unit: u: k -> A, an n×1 matrix
        label: Display name; ignored by equality
    """

    dim: int
    mult: Matrix
    unit: Matrix
    label: str = field(default="", compare=False)

    def __post_init__(self):
        validate_dimension(self.dim, "dim")
        validate_shape(self.mult, self.dim, self.dim * self.dim, "mult")
        validate_shape(self.unit, self.dim, 1, "unit")
        validate_same_field(self.mult, self.unit, "unit")

    @property
    def field(self) -> FieldSpec:
        return self.mult.field

    @property
    def identity(self) -> Matrix:
        return Matrix.identity(self.dim, self.field)

    def __str__(self) -> str:
        return self.label or f"algebra of dimension {self.dim} over {self.field.label}"


# ============================================================================
# Certifiers
# ============================================================================

def check_coalgebra(c: Coalgebra) -> CertReport:
    """Certify coassociativity and the counit axiom."""
    delta, i = c.delta, c.identity
    return certificate(
        str(c),
        compare_composites("coassociativity", kron(delta, i) @ delta, kron(i, delta) @ delta),
        # k⊗C and C⊗k are C on coordinates, so both counit composites compare with id.
        compare_stacked("counit", [kron(c.eps, i) @ delta, kron(i, c.eps) @ delta], [i, i]),
    )


def check_algebra(a: Algebra) -> CertReport:
    """Certify associativity and the unit axiom."""
    mult, i = a.mult, a.identity
    return certificate(
        str(a),
        compare_composites("associativity", mult @ kron(mult, i), mult @ kron(i, mult)),
        compare_stacked("unit", [mult @ kron(a.unit, i), mult @ kron(i, a.unit)], [i, i]),
    )


def require_certified(report: CertReport, operation: str) -> None:
    """Raise PreconditionError unless every diagram of ``report`` passes."""
    if not report.passed:
        raise PreconditionError(
            f"{operation} needs a certified {report.subject}",
            details={"failed": [v.diagram for v in report.failures]},
        )


# ============================================================================
# Standard examples
# ============================================================================

def grouplike(n: int, field: FieldSpec = QQ) -> Coalgebra:
    """k^n with Δ(e_i) = e_i⊗e_i and ε(e_i) = 1."""
    validate_dimension(n, "n")
    delta = Matrix.from_function(n * n, n, lambda r, c: 1 if r == c * n + c else 0, field)
    return Coalgebra(n, delta, Matrix.from_function(1, n, lambda r, c: 1, field), label=f"grouplike({n})")


def matrix_coalgebra(n: int, field: FieldSpec = QQ) -> Coalgebra:
    """The comatrix coalgebra on e_ij (index i*n+j): Δ(e_ij) = Σ_k e_ik⊗e_kj, ε(e_ij) = δ_ij."""
    validate_dimension(n, "n")
    dim = n * n
    entries = [0] * (dim * dim * dim)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = (i * n + k) * dim + (k * n + j)
                entries[row * dim + i * n + j] = 1
    eps = Matrix.from_function(1, dim, lambda r, c: 1 if c // n == c % n else 0, field)
    return Coalgebra(dim, Matrix(dim * dim, dim, tuple(entries), field), eps, label=f"matrix_coalgebra({n})")


def divided_power(top: int, field: FieldSpec = QQ) -> Coalgebra:
    """Divided powers c_0..c_top with Δ(c_n) = Σ_{i+j=n} c_i⊗c_j, ε(c_n) = δ_{n,0}."""
    validate_dimension(top, "top")
    dim = top + 1
    delta = Matrix.from_function(
        dim * dim, dim, lambda r, c: 1 if (r // dim) + (r % dim) == c else 0, field
    )
    eps = Matrix.from_function(1, dim, lambda r, c: 1 if c == 0 else 0, field)
    return Coalgebra(dim, delta, eps, label=f"divided_power({top})")


def trig(field: FieldSpec = QQ) -> Coalgebra:
    """The trigonometric coalgebra on c (index 0) and s (index 1).

    Δ(c) = c⊗c - s⊗s, Δ(s) = s⊗c + c⊗s, ε(c) = 1, ε(s) = 0.

    Raises:
        UnsupportedFieldError: In characteristic 2
    """
    if field.characteristic == 2:
        raise UnsupportedFieldError("trig is not defined in characteristic 2", field="field")
    delta = Matrix.from_rows([[1, 0], [0, 1], [0, 1], [-1, 0]], field)
    return Coalgebra(2, delta, Matrix.from_rows([[1, 0]], field), label="trig")


def _embedding(offset: int, size: int, total: int, field: FieldSpec) -> Matrix:
    return Matrix.from_function(total, size, lambda r, c: 1 if r == offset + c else 0, field)


def direct_sum(first: Coalgebra, second: Coalgebra) -> Coalgebra:
    """C ⊕ D with Δ and ε acting blockwise."""
    validate_same_field(first, second, "direct_sum")
    f = first.field
    total = first.dim + second.dim
    delta = Matrix.zeros(total * total, total, f)
    for offset, part in ((0, first), (first.dim, second)):
        inject = _embedding(offset, part.dim, total, f)
        delta = delta + kron(inject, inject) @ part.delta @ inject.transpose()
    eps = hstack([first.eps, second.eps], rows=1, field=f)
    return Coalgebra(total, delta, eps, label=f"{first}⊕{second}")


def dual_algebra(c: Coalgebra) -> Algebra:
    """The convolution algebra C*: mult = Δ*, unit = ε*.

    Raises:
        PreconditionError: If ``c`` does not pass check_coalgebra
    """
    require_certified(check_coalgebra(c), "dual_algebra")
    logger.debug(f"dualizing {c}")
    return convolution_algebra(c)


def convolution_algebra(c: Coalgebra) -> Algebra:
    """Δ* and ε* as an Algebra, without certifying ``c`` first."""
    return Algebra(c.dim, dual_map(c.delta), dual_map(c.eps), label=f"{c}*")


def is_dual_pair(a: Algebra, c: Coalgebra) -> bool:
    """True when ``a`` is C* on the nose (same field, m = Δ*, u = ε*)."""
    return a.field == c.field and a.mult == dual_map(c.delta) and a.unit == dual_map(c.eps)


def dual_coalgebra(a: Algebra) -> Coalgebra:
    """The coalgebra A*: Δ = m*, ε = u*; inverse of :func:`dual_algebra`.

    Raises:
        PreconditionError: If ``a`` does not pass check_algebra
    """
    require_certified(check_algebra(a), "dual_coalgebra")
    label = a.label[:-1] if a.label.endswith("*") else (f"{a.label}*" if a.label else "")
    return Coalgebra(a.dim, dual_map(a.mult), dual_map(a.unit), label=label)


def commutativity_witness(a: Algebra) -> Optional[Tuple[int, int]]:
    """A pair (i, j) with e_i e_j != e_j e_i, or None if ``a`` is commutative."""
    index = (a.mult @ swap(a.dim, a.dim, a.field)).first_difference(a.mult)
    if index is None:
        return None
    return divmod(index, a.dim)
