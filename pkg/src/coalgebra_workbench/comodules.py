"""Left comodules and right contramodules over a finite coalgebra.

A comodule (X, ρ) stores ρ: X -> C⊗X as an (n*x)×x matrix. A contramodule
(Z, θ) stores θ: Hom(C, Z) -> Z as a z×(n*z) matrix acting on Hom-coordinates.
"""

import logging
from dataclasses import dataclass

from .certify import certificate, compare_composites
from .coalgebra import Coalgebra
from .conventions import hom_solution_space, postcompose, precompose, psi
from .errors import StructuralError, validate_dimension, validate_same_base, validate_same_field, validate_shape
from .field import FieldSpec
from .linalg import Subspace, inverse
from .matrix import Matrix, kron
from .models import CertReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Comodule:
    """A left C-comodule (X, ρ: X -> C⊗X)."""

    over: Coalgebra
    dim: int
    rho: Matrix

    def __post_init__(self):
        validate_dimension(self.dim, "dim")
        validate_shape(self.rho, self.over.dim * self.dim, self.dim, "rho")
        validate_same_field(self.rho, self.over, "rho")

    @property
    def field(self) -> FieldSpec:
        return self.over.field

    def __str__(self) -> str:
        return f"comodule of dimension {self.dim} over {self.over}"


@dataclass(frozen=True)
class Contramodule:
    """A right C-contramodule (Z, θ: Hom(C, Z) -> Z)."""

    over: Coalgebra
    dim: int
    theta: Matrix

    def __post_init__(self):
        validate_dimension(self.dim, "dim")
        validate_shape(self.theta, self.dim, self.over.dim * self.dim, "theta")
        validate_same_field(self.theta, self.over, "theta")

    @property
    def field(self) -> FieldSpec:
        return self.over.field

    def __str__(self) -> str:
        return f"contramodule of dimension {self.dim} over {self.over}"


def check_comodule(x: Comodule) -> CertReport:
    """Certify the comodule square (Δ⊗id)ρ = (id⊗ρ)ρ and triangle (ε⊗id)ρ = id."""
    c = x.over
    i_x = Matrix.identity(x.dim, x.field)
    return certificate(
        str(x),
        compare_composites("square", kron(c.delta, i_x) @ x.rho, kron(c.identity, x.rho) @ x.rho),
        compare_composites("triangle", kron(c.eps, i_x) @ x.rho, i_x),
    )


def check_contramodule(z: Contramodule) -> CertReport:
    """Certify the contramodule square and triangle.

    square: θ∘Hom(C, θ) = θ∘Hom(Δ, Z)∘ψ on Hom(C, Hom(C, Z));
    triangle: θ∘Hom(ε, Z) = id, reading Hom(k, Z) as Z.
    """
    c, n = z.over, z.over.dim
    theta = z.theta
    return certificate(
        str(z),
        compare_composites(
            "square",
            theta @ postcompose(theta, n),
            theta @ precompose(c.delta, z.dim) @ psi(n, n, z.dim, z.field),
        ),
        compare_composites("triangle", theta @ precompose(c.eps, z.dim), Matrix.identity(z.dim, z.field)),
    )


def hom_comodules(x: Comodule, y: Comodule) -> Subspace:
    """All α: X -> Y with (id⊗α)ρ_X = ρ_Y α, in Hom-coordinates."""
    validate_same_base(x.over, y.over, "hom_comodules")
    i_n = x.over.identity
    space = hom_solution_space(lambda a: kron(i_n, a) @ x.rho - y.rho @ a, y.dim, x.dim, x.field)
    logger.debug(f"hom_comodules: dimension {space.dim}")
    return space


def hom_contramodules(z: Contramodule, t: Contramodule) -> Subspace:
    """All α: Z -> T with α θ_Z = θ_T Hom(C, α), in Hom-coordinates."""
    validate_same_base(z.over, t.over, "hom_contramodules")
    n = z.over.dim
    space = hom_solution_space(lambda a: t.theta @ postcompose(a, n) - a @ z.theta, t.dim, z.dim, z.field)
    logger.debug(f"hom_contramodules: dimension {space.dim}")
    return space


# ============================================================================
# Constructions
# ============================================================================

def regular_comodule(c: Coalgebra) -> Comodule:
    """C as a left comodule over itself through Δ."""
    return Comodule(c, c.dim, c.delta)


def direct_sum_comodules(x: Comodule, y: Comodule) -> Comodule:
    validate_same_base(x.over, y.over, "direct_sum_comodules")
    f, i_n = x.field, x.over.identity
    total = x.dim + y.dim
    rho = Matrix.zeros(x.over.dim * total, total, f)
    for offset, part in ((0, x), (x.dim, y)):
        inject = Matrix.from_function(total, part.dim, lambda r, c, o=offset: 1 if r == o + c else 0, f)
        rho = rho + kron(i_n, inject) @ part.rho @ inject.transpose()
    return Comodule(x.over, total, rho)


def cyclic_subcomodule(x: Comodule, vector) -> Subspace:
    """The subcomodule generated by ``vector``: span of (e_i*⊗id)ρ(v) over i."""
    values = Matrix.column_vector(vector, x.field)
    image = x.rho @ values
    chunks = [image.entries[i * x.dim:(i + 1) * x.dim] for i in range(x.over.dim)]
    return Subspace.spanned_by(chunks, x.dim, x.field)


def restrict_comodule(x: Comodule, w: Subspace) -> Comodule:
    """The comodule structure on a subcomodule W ⊂ X, in W's canonical basis.

    Raises:
        StructuralError: If W is not closed under ρ
    """
    j, s = w.inclusion(), w.coordinate_map()
    i_n = x.over.identity
    rho = kron(i_n, s) @ x.rho @ j
    if kron(i_n, j) @ rho != x.rho @ j:
        raise StructuralError("subspace is not a subcomodule", field="subspace", details={"dim": w.dim})
    return Comodule(x.over, w.dim, rho)


def conjugate_comodule(x: Comodule, p: Matrix) -> Comodule:
    """Transport ρ along the change of basis ``p``: ρ' = (id⊗P) ρ P⁻¹."""
    return Comodule(x.over, x.dim, kron(x.over.identity, p) @ x.rho @ inverse(p))


def conjugate_contramodule(z: Contramodule, p: Matrix) -> Contramodule:
    """Transport θ along ``p``: θ' = P θ Hom(C, P⁻¹)."""
    return Contramodule(z.over, z.dim, p @ z.theta @ postcompose(inverse(p), z.over.dim))
