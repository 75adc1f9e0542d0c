"""The four duality functors between comodules, contramodules and C*-modules.

        C-comodules  <--- Simson --->  pseudocompact left C*-modules
             |                                   |
         (-)* (dual)                          Pontryagin
             |                                   |
     C-contramodules <--- right vertical --- discrete right C*-modules

Every arrow acts on carriers by X -> X*, which is the identity on
coordinates, so each functor is a reshuffle of one structure matrix.
The right vertical arrow is built directly; its agreement with the other
three composed is checked, not assumed.
"""

import logging

from .certify import certificate, compare_composites
from .coalgebra import Coalgebra, convolution_algebra, is_dual_pair
from .comodules import Comodule, Contramodule
from .conventions import postcompose, precompose, psi
from .errors import MismatchError
from .matrix import Matrix, dual_map, kron
from .models import CertReport
from .modules import LeftModule, RightModule, action_to_theta, theta_to_action

logger = logging.getLogger(__name__)


def _require_dual_pair(algebra, c: Coalgebra, operation: str) -> None:
    if not is_dual_pair(algebra, c):
        raise MismatchError(
            f"{operation}: module is not over the dual algebra of {c}",
            field="over",
        )


def comodule_to_contramodule(x: Comodule) -> Contramodule:
    """(X, ρ) -> (X*, ρ̄) with ρ̄ = ρ*∘ψ: Hom(C, X*) -> (C⊗X)* -> X*.

    Accepts any structure map; the output is certified exactly when the
    input is.
    """
    n = x.over.dim
    theta = dual_map(x.rho) @ psi(n, x.dim, 1, x.field)
    return Contramodule(x.over, x.dim, theta)


def contramodule_to_comodule(z: Contramodule) -> Comodule:
    n = z.over.dim
    rho = dual_map(z.theta @ psi(n, z.dim, 1, z.field).transpose())
    return Comodule(z.over, z.dim, rho)


def pcmodule_to_comodule(m: LeftModule, c: Coalgebra) -> Comodule:
    """Simson's arrow: a left C*-module X gives the C-comodule X* with ρ = action*.

    Raises:
        MismatchError: If ``m`` is not over C*
    """
    _require_dual_pair(m.over, c, "pcmodule_to_comodule")
    return Comodule(c, m.dim, dual_map(m.action))


def comodule_to_pcmodule(x: Comodule) -> LeftModule:
    return LeftModule(convolution_algebra(x.over), x.dim, dual_map(x.rho))


def _twist(action: Matrix, a_dim: int, x_dim: int, left_to_right: bool) -> Matrix:
    # R[j, r*a + i] = L[r, i*x + j]
    if left_to_right:
        return Matrix.from_function(
            x_dim, x_dim * a_dim, lambda j, col: action[col // a_dim, (col % a_dim) * x_dim + j], action.field
        )
    return Matrix.from_function(
        x_dim, a_dim * x_dim, lambda r, col: action[col % x_dim, r * a_dim + col // x_dim], action.field
    )


def pcmodule_to_dmodule(m: LeftModule) -> RightModule:
    """Pontryagin arrow: X* with (f·a)(v) = f(a·v)."""
    return RightModule(m.over, m.dim, _twist(m.action, m.over.dim, m.dim, left_to_right=True))


def dmodule_to_pcmodule(m: RightModule) -> LeftModule:
    """X* with (a·f)(v) = f(v·a)."""
    return LeftModule(m.over, m.dim, _twist(m.action, m.over.dim, m.dim, left_to_right=False))


def dmodule_to_contramodule(m: RightModule, c: Coalgebra) -> Contramodule:
    """Right vertical arrow: the dual of the θ-formulation of ``m``.

    Raises:
        MismatchError: If ``m`` is not over C*
    """
    _require_dual_pair(m.over, c, "dmodule_to_contramodule")
    theta = action_to_theta(m.action, c.dim, m.dim)
    return Contramodule(c, m.dim, dual_map(theta))


def contramodule_to_dmodule(z: Contramodule) -> RightModule:
    algebra = convolution_algebra(z.over)
    action = theta_to_action(dual_map(z.theta), z.over.dim, z.dim)
    return RightModule(algebra, z.dim, action)


def composite_right_vertical(m: RightModule, c: Coalgebra) -> Contramodule:
    """Inverse Pontryagin, then Simson, then X -> X*."""
    return comodule_to_contramodule(pcmodule_to_comodule(dmodule_to_pcmodule(m), c))


# ============================================================================
# Oracles
# ============================================================================

def proof_diagram_oracles(x: Comodule) -> CertReport:
    """The squares used to transport comodule axioms to contramodule axioms.

    They commute for every structure map ρ, valid or not:

    * square_1: ψ_{C⊗C,X}∘ψ_{C,C} = ψ_{C,C⊗X}∘Hom(C, ψ_{C,X}) (evaluation);
    * square_2: ψ∘Hom(Δ, X*) = (Δ⊗id)*∘ψ (naturality in the first variable);
    * square_3: (id⊗ρ)*∘ψ = ψ∘Hom(C, ρ*) (naturality in the parameter);
    * prism_front: ψ∘Hom(ε, X*) = (ε⊗id)*∘ψ (the counit face).
    """
    c, n, d, f = x.over, x.over.dim, x.dim, x.field
    return certificate(
        f"proof diagrams for {x}",
        compare_composites(
            "square_1",
            psi(n * n, d, 1, f) @ psi(n, n, d, f),
            psi(n, n * d, 1, f) @ postcompose(psi(n, d, 1, f), n),
        ),
        compare_composites(
            "square_2",
            psi(n, d, 1, f) @ precompose(c.delta, d),
            dual_map(kron(c.delta, Matrix.identity(d, f))) @ psi(n * n, d, 1, f),
        ),
        compare_composites(
            "square_3",
            dual_map(kron(c.identity, x.rho)) @ psi(n, n * d, 1, f),
            psi(n, d, 1, f) @ postcompose(dual_map(x.rho), n),
        ),
        compare_composites(
            "prism_front",
            psi(n, d, 1, f) @ precompose(c.eps, d),
            dual_map(kron(c.eps, Matrix.identity(d, f))) @ psi(1, d, 1, f),
        ),
    )


def psi_naturality_report(alpha: Matrix, beta: Matrix, zeta: Matrix) -> CertReport:
    """Naturality of ψ in all three variables.

    Args:
        alpha: A' -> A
        beta: B' -> B
        zeta: Z -> Z'
    """
    f = alpha.field
    a, a2 = alpha.rows, alpha.cols
    b, b2 = beta.rows, beta.cols
    z, z2 = zeta.cols, zeta.rows
    return certificate(
        "psi naturality",
        compare_composites(
            "natural_in_A",
            psi(a2, b, z, f) @ precompose(alpha, b * z),
            precompose(kron(alpha, Matrix.identity(b, f)), z) @ psi(a, b, z, f),
        ),
        compare_composites(
            "natural_in_B",
            psi(a, b2, z, f) @ postcompose(precompose(beta, z), a),
            precompose(kron(Matrix.identity(a, f), beta), z) @ psi(a, b, z, f),
        ),
        compare_composites(
            "natural_in_Z",
            psi(a, b, z2, f) @ postcompose(postcompose(zeta, b), a),
            postcompose(zeta, a * b) @ psi(a, b, z, f),
        ),
    )
