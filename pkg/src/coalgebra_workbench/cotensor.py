"""Right comodules, bicomodules, cotensor products and tensor products over C*.

Right C-comodules mirror the left ones: μ: M -> M⊗C is an (m*n)×m matrix,
the square is (μ⊗id)μ = (id⊗Δ)μ and the triangle (id⊗ε)μ = id.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

from .certify import certificate, compare_composites
from .coalgebra import Coalgebra, convolution_algebra, require_certified
from .comodules import Comodule, check_comodule, direct_sum_comodules
from .conventions import hom_solution_space
from .errors import (
    InvariantError,
    StructuralError,
    validate_dimension,
    validate_same_base,
    validate_same_field,
    validate_shape,
)
from .field import FieldSpec
from .linalg import Subspace, inverse, kernel_basis, quotient_map
from .matrix import Matrix, dual_map, kron
from .models import CertReport, DiagramVerdict
from .modules import LeftModule, RightModule, check_left_module, check_right_module

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RightComodule:
    """A right C-comodule (M, μ: M -> M⊗C)."""

    over: Coalgebra
    dim: int
    mu: Matrix

    def __post_init__(self):
        validate_dimension(self.dim, "dim")
        validate_shape(self.mu, self.dim * self.over.dim, self.dim, "mu")
        validate_same_field(self.mu, self.over, "mu")

    @property
    def field(self) -> FieldSpec:
        return self.over.field

    def __str__(self) -> str:
        return f"right comodule of dimension {self.dim} over {self.over}"


@dataclass(frozen=True)
class Bicomodule:
    """A C-D-bicomodule: left costructure λ over C, right costructure μ over D."""

    over_left: Coalgebra
    over_right: Coalgebra
    dim: int
    lam: Matrix
    mu: Matrix

    def __post_init__(self):
        validate_dimension(self.dim, "dim")
        validate_shape(self.lam, self.over_left.dim * self.dim, self.dim, "lambda")
        validate_shape(self.mu, self.dim * self.over_right.dim, self.dim, "mu")
        validate_same_field(self.lam, self.mu, "mu")
        validate_same_field(self.lam, self.over_left, "over_left")
        validate_same_field(self.mu, self.over_right, "over_right")

    @property
    def field(self) -> FieldSpec:
        return self.over_left.field

    @property
    def left(self) -> Comodule:
        return Comodule(self.over_left, self.dim, self.lam)

    @property
    def right(self) -> RightComodule:
        return RightComodule(self.over_right, self.dim, self.mu)

    def __str__(self) -> str:
        return f"bicomodule of dimension {self.dim} over {self.over_left} and {self.over_right}"


def check_right_comodule(m: RightComodule) -> CertReport:
    c = m.over
    i_m = Matrix.identity(m.dim, m.field)
    return certificate(
        str(m),
        compare_composites("square", kron(m.mu, c.identity) @ m.mu, kron(i_m, c.delta) @ m.mu),
        compare_composites("triangle", kron(i_m, c.eps) @ m.mu, i_m),
    )


def check_bicomodule(m: Bicomodule) -> CertReport:
    """Both costructures plus (id_C⊗μ)λ = (λ⊗id_D)μ."""
    verdicts = []
    for side, report in (("left", check_comodule(m.left)), ("right", check_right_comodule(m.right))):
        verdicts.extend(DiagramVerdict(f"{side}.{v.diagram}", v.passed, v.witness) for v in report.verdicts)
    verdicts.append(
        compare_composites(
            "compatibility",
            kron(m.over_left.identity, m.mu) @ m.lam,
            kron(m.lam, m.over_right.identity) @ m.mu,
        )
    )
    return certificate(str(m), *verdicts)


def hom_right_comodules(x: RightComodule, y: RightComodule) -> Subspace:
    """All α: X -> Y with (α⊗id)μ_X = μ_Y α."""
    validate_same_base(x.over, y.over, "hom_right_comodules")
    i_n = x.over.identity
    return hom_solution_space(lambda a: kron(a, i_n) @ x.mu - y.mu @ a, y.dim, x.dim, x.field)


def is_right_comodule_map(alpha: Matrix, x: RightComodule, y: RightComodule) -> bool:
    return kron(alpha, x.over.identity) @ x.mu == y.mu @ alpha


# ============================================================================
# Constructions
# ============================================================================

def regular_right_comodule(c: Coalgebra) -> RightComodule:
    return RightComodule(c, c.dim, c.delta)


def regular_bicomodule(c: Coalgebra) -> Bicomodule:
    """C as a C-C-bicomodule through Δ on both sides."""
    return Bicomodule(c, c, c.dim, c.delta, c.delta)


def tensor_bicomodule(x: Comodule, y: RightComodule) -> Bicomodule:
    """X⊗Y with λ = ρ_X⊗id and μ = id⊗μ_Y."""
    validate_same_field(x, y, "tensor_bicomodule")
    i_x, i_y = Matrix.identity(x.dim, x.field), Matrix.identity(y.dim, y.field)
    return Bicomodule(x.over, y.over, x.dim * y.dim, kron(x.rho, i_y), kron(i_x, y.mu))


def direct_sum_right_comodules(x: RightComodule, y: RightComodule) -> RightComodule:
    validate_same_base(x.over, y.over, "direct_sum_right_comodules")
    f, i_n = x.field, x.over.identity
    total = x.dim + y.dim
    mu = Matrix.zeros(total * x.over.dim, total, f)
    for offset, part in ((0, x), (x.dim, y)):
        inject = Matrix.from_function(total, part.dim, lambda r, c, o=offset: 1 if r == o + c else 0, f)
        mu = mu + kron(inject, i_n) @ part.mu @ inject.transpose()
    return RightComodule(x.over, total, mu)


def cyclic_right_subcomodule(x: RightComodule, vector) -> Subspace:
    """Span of (id⊗e_i*)μ(v) over i."""
    n = x.over.dim
    image = x.mu @ Matrix.column_vector(vector, x.field)
    chunks = [[image.entries[r * n + i] for r in range(x.dim)] for i in range(n)]
    return Subspace.spanned_by(chunks, x.dim, x.field)


def restrict_right_comodule(x: RightComodule, w: Subspace) -> RightComodule:
    j, s = w.inclusion(), w.coordinate_map()
    i_n = x.over.identity
    mu = kron(s, i_n) @ x.mu @ j
    if kron(j, i_n) @ mu != x.mu @ j:
        raise StructuralError("subspace is not a right subcomodule", field="subspace", details={"dim": w.dim})
    return RightComodule(x.over, w.dim, mu)


def conjugate_right_comodule(x: RightComodule, p: Matrix) -> RightComodule:
    return RightComodule(x.over, x.dim, kron(p, x.over.identity) @ x.mu @ inverse(p))


def direct_sum_bicomodules(x: Bicomodule, y: Bicomodule) -> Bicomodule:
    left = direct_sum_comodules(x.left, y.left)
    right = direct_sum_right_comodules(x.right, y.right)
    return Bicomodule(x.over_left, x.over_right, left.dim, left.rho, right.mu)


def conjugate_bicomodule(x: Bicomodule, p: Matrix) -> Bicomodule:
    p_inv = inverse(p)
    lam = kron(x.over_left.identity, p) @ x.lam @ p_inv
    mu = kron(p, x.over_right.identity) @ x.mu @ p_inv
    return Bicomodule(x.over_left, x.over_right, x.dim, lam, mu)


def right_comodule_to_module(m: RightComodule) -> RightModule:
    """M* as a right C*-module, action μ*."""
    return RightModule(convolution_algebra(m.over), m.dim, dual_map(m.mu))


# ============================================================================
# Cotensor and tensor products
# ============================================================================

@dataclass(frozen=True)
class CotensorSpace:
    """L□_C M inside L⊗M, with the right D-structure when M is a bicomodule."""

    left: RightComodule
    right: Union[Comodule, Bicomodule]
    space: Subspace
    induced: Optional[RightComodule] = None

    @property
    def dim(self) -> int:
        return self.space.dim


def cotensor(l: RightComodule, m: Union[Comodule, Bicomodule]) -> CotensorSpace:
    """The kernel of μ_L⊗id_M - id_L⊗λ_M.

    Raises:
        MismatchError: If L and M are over different coalgebras
        PreconditionError: If an input is not certified
        InvariantError: If id_L⊗μ_M does not restrict to a certified right D-comodule
    """
    left = m.left if isinstance(m, Bicomodule) else m
    validate_same_base(l.over, left.over, "cotensor")
    require_certified(check_right_comodule(l), "cotensor")
    require_certified(check_bicomodule(m) if isinstance(m, Bicomodule) else check_comodule(m), "cotensor")

    i_l, i_m = Matrix.identity(l.dim, l.field), Matrix.identity(m.dim, l.field)
    space = kernel_basis(kron(l.mu, i_m) - kron(i_l, left.rho))
    logger.debug(f"cotensor: dimension {space.dim} inside {l.dim * m.dim}")
    if not isinstance(m, Bicomodule):
        return CotensorSpace(l, m, space)

    j, s = space.inclusion(), space.coordinate_map()
    i_d = m.over_right.identity
    full = kron(i_l, m.mu) @ j
    mu = kron(s, i_d) @ full
    if kron(j, i_d) @ mu != full:
        raise InvariantError("id⊗μ does not preserve the cotensor product", details={"dim": space.dim})
    induced = RightComodule(m.over_right, space.dim, mu)
    report = check_right_comodule(induced)
    if not report.passed:
        raise InvariantError("induced structure on the cotensor product fails", details=report.to_dict())
    return CotensorSpace(l, m, space, induced)


@dataclass(frozen=True)
class TensorQuotient:
    """P⊗_A Q as (P⊗Q)/relations; ``projection`` has kernel ``relations``."""

    relations: Subspace
    projection: Matrix

    @property
    def dim(self) -> int:
        return self.projection.rows


def tensor_over_algebra(p: RightModule, q: LeftModule) -> TensorQuotient:
    """Quotient of P⊗Q by span{(p·a)⊗q - p⊗(a·q)}.

    Raises:
        MismatchError: If P and Q are over different algebras
        PreconditionError: If an input is not certified
    """
    validate_same_base(p.over, q.over, "tensor_over_algebra")
    require_certified(check_right_module(p), "tensor_over_algebra")
    require_certified(check_left_module(q), "tensor_over_algebra")
    i_p, i_q = Matrix.identity(p.dim, p.field), Matrix.identity(q.dim, q.field)
    relations = Subspace.column_space(kron(p.action, i_q) - kron(i_p, q.action))
    projection = quotient_map(p.dim * q.dim, relations)
    logger.debug(f"tensor_over_algebra: {p.dim * q.dim} - {relations.dim} relations")
    return TensorQuotient(relations, projection)
