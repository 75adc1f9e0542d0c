"""Modules over a finite algebra in both the action and the θ formulation.

A right module can be given by its action X⊗A -> X or, equivalently, by
θ: X -> Hom(A, X), θ(x)(a) = x·a. ThetaModule stores θ as an (a*x)×x matrix
(the map itself); :attr:`ThetaModule.dualized` is the x×(a*x) transpose that
lines up with Contramodule.theta.
"""

import logging
from dataclasses import dataclass
from typing import Union

from .certify import certificate, compare_composites
from .coalgebra import Algebra, require_certified
from .conventions import hom_solution_space, postcompose, precompose, psi, unvec, vec
from .errors import StructuralError, validate_dimension, validate_same_base, validate_same_field, validate_shape
from .field import FieldSpec
from .linalg import Subspace
from .matrix import Matrix, kron
from .models import CertReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeftModule:
    """(X, A⊗X -> X); action is x×(a*x)."""

    over: Algebra
    dim: int
    action: Matrix

    def __post_init__(self):
        validate_dimension(self.dim, "dim")
        validate_shape(self.action, self.dim, self.over.dim * self.dim, "action")
        validate_same_field(self.action, self.over, "action")

    @property
    def field(self) -> FieldSpec:
        return self.over.field

    def __str__(self) -> str:
        return f"left module of dimension {self.dim} over {self.over}"


@dataclass(frozen=True)
class RightModule:
    """(X, X⊗A -> X); action is x×(x*a)."""

    over: Algebra
    dim: int
    action: Matrix

    def __post_init__(self):
        validate_dimension(self.dim, "dim")
        validate_shape(self.action, self.dim, self.dim * self.over.dim, "action")
        validate_same_field(self.action, self.over, "action")

    @property
    def field(self) -> FieldSpec:
        return self.over.field

    def __str__(self) -> str:
        return f"right module of dimension {self.dim} over {self.over}"


@dataclass(frozen=True)
class ThetaModule:
    """A right module given as θ: X -> Hom(A, X); theta is (a*x)×x."""

    over: Algebra
    dim: int
    theta: Matrix

    def __post_init__(self):
        validate_dimension(self.dim, "dim")
        validate_shape(self.theta, self.over.dim * self.dim, self.dim, "theta")
        validate_same_field(self.theta, self.over, "theta")

    @property
    def field(self) -> FieldSpec:
        return self.over.field

    @property
    def dualized(self) -> Matrix:
        """θ*: Hom(A, X)* -> X*, with the shape of a contramodule structure map."""
        return self.theta.transpose()

    def __str__(self) -> str:
        return f"theta module of dimension {self.dim} over {self.over}"


AnyModule = Union[LeftModule, RightModule, ThetaModule]


# ============================================================================
# Certifiers
# ============================================================================

def check_left_module(m: LeftModule) -> CertReport:
    a, i_x = m.over, Matrix.identity(m.dim, m.field)
    act = m.action
    return certificate(
        str(m),
        compare_composites("associativity", act @ kron(a.mult, i_x), act @ kron(a.identity, act)),
        compare_composites("unit", act @ kron(a.unit, i_x), i_x),
    )


def check_right_module(m: RightModule) -> CertReport:
    a, i_x = m.over, Matrix.identity(m.dim, m.field)
    act = m.action
    return certificate(
        str(m),
        compare_composites("associativity", act @ kron(act, a.identity), act @ kron(i_x, a.mult)),
        compare_composites("unit", act @ kron(i_x, a.unit), i_x),
    )


def check_theta_module(m: ThetaModule) -> CertReport:
    """Certify the θ-formulation.

    square: Hom(A, θ)∘θ = ψ⁻¹∘Hom(m, X)∘θ as maps X -> Hom(A, Hom(A, X));
    triangle: Hom(u, X)∘θ = id.
    """
    a, x = m.over.dim, m.dim
    theta = m.theta
    return certificate(
        str(m),
        compare_composites(
            "square",
            postcompose(theta, a) @ theta,
            psi(a, a, x, m.field).transpose() @ precompose(m.over.mult, x) @ theta,
        ),
        compare_composites("triangle", precompose(m.over.unit, x) @ theta, Matrix.identity(x, m.field)),
    )


def check_module(m: AnyModule) -> CertReport:
    if isinstance(m, LeftModule):
        return check_left_module(m)
    if isinstance(m, RightModule):
        return check_right_module(m)
    return check_theta_module(m)


# ============================================================================
# Hom solvers
# ============================================================================

def hom_left_modules(x: LeftModule, y: LeftModule) -> Subspace:
    validate_same_base(x.over, y.over, "hom_modules")
    i_a = x.over.identity
    return hom_solution_space(lambda al: al @ x.action - y.action @ kron(i_a, al), y.dim, x.dim, x.field)


def hom_right_modules(x: RightModule, y: RightModule) -> Subspace:
    validate_same_base(x.over, y.over, "hom_modules")
    i_a = x.over.identity
    return hom_solution_space(lambda al: al @ x.action - y.action @ kron(al, i_a), y.dim, x.dim, x.field)


def hom_theta_modules(x: ThetaModule, y: ThetaModule) -> Subspace:
    validate_same_base(x.over, y.over, "hom_modules")
    a = x.over.dim
    return hom_solution_space(lambda al: y.theta @ al - postcompose(al, a) @ x.theta, y.dim, x.dim, x.field)


def hom_modules(x: AnyModule, y: AnyModule) -> Subspace:
    """Module homomorphisms X -> Y in Hom-coordinates; both in the same formulation."""
    if type(x) is not type(y):
        raise StructuralError(
            f"cannot compare a {type(x).__name__} with a {type(y).__name__}",
            field="hom_modules",
        )
    if isinstance(x, LeftModule):
        space = hom_left_modules(x, y)
    elif isinstance(x, RightModule):
        space = hom_right_modules(x, y)
    else:
        space = hom_theta_modules(x, y)
    logger.debug(f"hom_modules ({type(x).__name__}): dimension {space.dim}")
    return space


# ============================================================================
# Formulation converters and examples
# ============================================================================

def action_to_theta(action: Matrix, a_dim: int, x_dim: int) -> Matrix:
    """θ = ψ⁻¹(action) for a right action X⊗A -> X; no axioms checked."""
    return unvec(psi(x_dim, a_dim, x_dim, action.field).transpose() @ vec(action), a_dim * x_dim, x_dim)


def theta_to_action(theta: Matrix, a_dim: int, x_dim: int) -> Matrix:
    """Inverse of :func:`action_to_theta`."""
    return unvec(psi(x_dim, a_dim, x_dim, theta.field) @ vec(theta), x_dim, x_dim * a_dim)


def right_module_to_theta(m: RightModule) -> ThetaModule:
    """Raises PreconditionError on uncertified input."""
    require_certified(check_right_module(m), "right_module_to_theta")
    return ThetaModule(m.over, m.dim, action_to_theta(m.action, m.over.dim, m.dim))


def theta_to_right_module(m: ThetaModule) -> RightModule:
    """Raises PreconditionError on uncertified input."""
    require_certified(check_theta_module(m), "theta_to_right_module")
    return RightModule(m.over, m.dim, theta_to_action(m.theta, m.over.dim, m.dim))


def regular_left_module(a: Algebra) -> LeftModule:
    return LeftModule(a, a.dim, a.mult)


def regular_right_module(a: Algebra) -> RightModule:
    return RightModule(a, a.dim, a.mult)
