"""Mixed homomorphisms, the cohom functor h(M, -) and the cotensor-cohom adjunction.

For a contramodule (N, θ) and a right comodule (M, μ) over D, a linear map
γ: N -> M is a mixed homomorphism when ψ̄(γθ) = μγ. For a C-D-bicomodule M,
h(M, N) = Hom_D(N, M)* with the contramodule structure obtained by dualizing
the right C*-module structure of Hom_D(N, M) twice.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .certify import compare_composites
from .coalgebra import convolution_algebra, dual_algebra, require_certified
from .comodules import Comodule, Contramodule, check_comodule, check_contramodule
from .conventions import postcompose, precompose, psi_bar, unvec, vec
from .cotensor import (
    Bicomodule,
    RightComodule,
    check_bicomodule,
    check_right_comodule,
    cotensor,
    is_right_comodule_map,
)
from .duality import comodule_to_contramodule, dmodule_to_pcmodule, pcmodule_to_comodule
from .errors import InvariantError, PreconditionError, validate_same_base
from .linalg import Subspace, kernel_basis, rank
from .matrix import Matrix, hstack, kron
from .models import AdjunctionReport, DiagramVerdict
from .modules import (
    LeftModule,
    RightModule,
    ThetaModule,
    check_right_module,
    check_theta_module,
    hom_left_modules,
    right_module_to_theta,
)

logger = logging.getLogger(__name__)


def mixed_hom(n: Contramodule, m: RightComodule) -> Subspace:
    """All γ: N -> M with ψ̄(γθ) = μγ, in Hom-coordinates of Hom(N, M).

    Raises:
        MismatchError: If N and M are over different coalgebras
        PreconditionError: If an input is not certified
    """
    validate_same_base(n.over, m.over, "mixed_hom")
    require_certified(check_contramodule(n), "mixed_hom")
    require_certified(check_right_comodule(m), "mixed_hom")
    d = n.over.dim
    system = psi_bar(d, n.dim, m.dim, n.field) @ precompose(n.theta, m.dim) - postcompose(m.mu, n.dim)
    space = kernel_basis(system)
    logger.debug(f"mixed_hom: dimension {space.dim} inside {n.dim * m.dim}")
    return space


def mixed_hom_via_modules(n: Contramodule, m: RightComodule) -> Subspace:
    """Mixed homomorphisms as D*-linear maps, an oracle for :func:`mixed_hom`.

    N is a left D*-module through f·n = θ(f⊗n), reading Hom(D, N) as D*⊗N,
    so its action matrix is θ itself; M is one through f·m = (id⊗f)μ(m).
    Applying id⊗f to ψ̄(γθ) = μγ for every f gives γ(f·n) = f·γ(n).
    """
    validate_same_base(n.over, m.over, "mixed_hom")
    d, f = n.over.dim, n.field
    algebra = convolution_algebra(n.over)
    action = Matrix.from_function(m.dim, d * m.dim, lambda s, col: m.mu[s * d + col // m.dim, col % m.dim], f)
    return hom_left_modules(LeftModule(algebra, n.dim, n.theta), LeftModule(algebra, m.dim, action))


def is_contramodule_map(alpha: Matrix, z: Contramodule, t: Contramodule) -> bool:
    return t.theta @ postcompose(alpha, z.over.dim) == alpha @ z.theta


@dataclass(frozen=True)
class CohomSpace:
    """Every stage of the construction of h(M, N).

    Attributes:
        hom_space: H = Hom_D(N, M), basis γ_t as vec-coordinates
        right_module: H as a right C*-module, (γ·c*) = c*·γ through λ
        theta_module: The same module in θ-formulation
        comodule: H as a left C-comodule
        contramodule: h(M, N) = H* as a C-contramodule
    """

    bicomodule: Bicomodule
    argument: Contramodule
    hom_space: Subspace
    right_module: RightModule
    theta_module: ThetaModule
    comodule: Comodule
    contramodule: Contramodule

    @property
    def dim(self) -> int:
        return self.hom_space.dim

    def basis_maps(self) -> List[Matrix]:
        m, n = self.bicomodule.dim, self.argument.dim
        return [unvec(v, m, n, self.hom_space.field) for v in self.hom_space.vectors()]

    def coordinates(self, gamma: Matrix) -> Optional[Tuple]:
        """Coordinates of a map N -> M in the basis of H, or None if it is not mixed."""
        return self.hom_space.coordinates(vec(gamma))


def cohom_space(m: Bicomodule, n: Contramodule) -> CohomSpace:
    """Build h(M, N) step by step.

    Raises:
        PreconditionError: If an input is not certified
        InvariantError: If an intermediate structure fails its certificate
    """
    require_certified(check_bicomodule(m), "cohom")
    c = m.over_left
    f = m.field
    hom_space = mixed_hom(n, m.right)
    h = hom_space.dim
    gammas = [unvec(v, m.dim, n.dim, f) for v in hom_space.vectors()]

    # (γ·e_i*) = A_i γ with A_i = (e_i*⊗id)λ, the i-th row block of λ.
    blocks = [m.lam.select_rows(list(range(i * m.dim, (i + 1) * m.dim))) for i in range(c.dim)]

    columns = []
    for t, gamma in enumerate(gammas):
        for i in range(c.dim):
            coords = hom_space.coordinates(vec(blocks[i] @ gamma))
            if coords is None:
                raise InvariantError(
                    "C*-action does not preserve the mixed homomorphisms",
                    details={"basis_index": t, "coalgebra_index": i},
                )
            columns.append(coords)
    action = Matrix.from_columns(columns, f, rows=h) if columns else Matrix.zeros(h, h * c.dim, f)
    right_module = RightModule(dual_algebra(c), h, action)
    report = check_right_module(right_module)
    if not report.passed:
        raise InvariantError("Hom_D(N, M) is not a right C*-module", details=report.to_dict())
    theta_module = right_module_to_theta(right_module)
    report = check_theta_module(theta_module)
    if not report.passed:
        raise InvariantError("θ-formulation of Hom_D(N, M) fails", details=report.to_dict())

    comodule = Comodule(c, h, theta_module.theta)
    if comodule != pcmodule_to_comodule(dmodule_to_pcmodule(right_module), c):
        raise InvariantError("double dualization disagrees with the θ-formulation", details={"dim": h})
    report = check_comodule(comodule)
    if not report.passed:
        raise InvariantError("Hom_D(N, M) is not a left C-comodule", details=report.to_dict())

    contramodule = comodule_to_contramodule(comodule)
    report = check_contramodule(contramodule)
    if not report.passed:
        raise InvariantError("h(M, N) fails the contramodule axioms", details=report.to_dict())
    logger.debug(f"cohom: dimension {h}")
    return CohomSpace(m, n, hom_space, right_module, theta_module, comodule, contramodule)


def cohom(m: Bicomodule, n: Contramodule) -> Contramodule:
    """h(M, N) = Hom_D(N, M)* as a right C-contramodule."""
    return cohom_space(m, n).contramodule


def cohom_map(source: CohomSpace, target: CohomSpace, phi: Matrix) -> Matrix:
    """h(M, φ): h(M, N') -> h(M, N) for a contramodule map φ: N' -> N.

    ``source`` is the cohom space of N', ``target`` that of N. Precomposition
    γ -> γφ maps Hom_D(N, M) to Hom_D(N', M); its dual is the result.

    Raises:
        PreconditionError: If φ is not a contramodule homomorphism
        InvariantError: If the result is not a contramodule homomorphism
    """
    if not is_contramodule_map(phi, source.argument, target.argument):
        raise PreconditionError("cohom_map needs a contramodule homomorphism")
    f = phi.field
    columns = []
    for gamma in target.basis_maps():
        coords = source.coordinates(gamma @ phi)
        if coords is None:
            raise InvariantError("γφ is not a mixed homomorphism")
        columns.append(coords)
    restriction = Matrix.from_columns(columns, f, rows=source.dim) if columns else Matrix.zeros(source.dim, 0, f)
    result = restriction.transpose()
    if not is_contramodule_map(result, source.contramodule, target.contramodule):
        raise InvariantError("h(M, φ) is not a contramodule homomorphism")
    return result


# ============================================================================
# Adjunction
# ============================================================================

def _curry(full: Matrix, l_dim: int, space: CohomSpace) -> Optional[Matrix]:
    """Ψ(Φ): h(M, N) -> L for Φ: N -> L⊗M, or None if a row block is not mixed.

    Row block r of Φ is a map γ_r: N -> M; Ψ(Φ) sends the dual basis vector
    γ_t* to Σ_r (coefficient of γ_t in γ_r) e_r.
    """
    m = space.bicomodule.dim
    columns = []
    for r in range(l_dim):
        gamma = full.select_rows(list(range(r * m, (r + 1) * m)))
        coords = space.coordinates(gamma)
        if coords is None:
            return None
        columns.append(coords)
    if not columns:
        return Matrix.zeros(0, space.dim, full.field)
    return Matrix.from_columns(columns, full.field, rows=space.dim).transpose()


def adjunction_check(
    l: RightComodule,
    m: Bicomodule,
    n: Contramodule,
    l_maps: Sequence[Tuple[RightComodule, Matrix]] = (),
    n_maps: Sequence[Tuple[Contramodule, Matrix]] = (),
) -> AdjunctionReport:
    """Verify Hom_D(N, L□_C M) ≅ Hom_C(h(M, N), L) on one instance.

    Args:
        l: Right C-comodule
        m: C-D-bicomodule
        n: D-contramodule
        l_maps: Pairs (L2, β) with β: L -> L2 a right comodule map
        n_maps: Pairs (N2, φ) with φ: N2 -> N a contramodule map

    Raises:
        PreconditionError: If an input or a supplied map is not certified
    """
    f = l.field
    cot = cotensor(l, m)
    v = cot.induced
    space = cohom_space(m, n)
    lhs = mixed_hom(n, v)
    rhs = mixed_hom(space.contramodule, l)
    j = cot.space.inclusion()

    def full_map(vector) -> Matrix:
        return j @ unvec(vector, v.dim, n.dim, f)

    verdicts: List[DiagramVerdict] = [
        compare_composites(
            "dimension", Matrix.column_vector([lhs.dim], f), Matrix.column_vector([rhs.dim], f)
        )
    ]

    curried = [_curry(full_map(vector), l.dim, space) for vector in lhs.vectors()]
    columns = []
    well_defined = all(curried_map is not None for curried_map in curried)
    if well_defined:
        for curried_map in curried:
            coords = rhs.coordinates(vec(curried_map))
            if coords is None:
                well_defined = False
                break
            columns.append(coords)
    verdicts.append(DiagramVerdict("well_defined", well_defined))

    if well_defined and columns:
        iso = Matrix.from_columns(columns, f, rows=rhs.dim)
    else:
        iso = Matrix.zeros(rhs.dim, lhs.dim if well_defined else 0, f)
    bijective = well_defined and lhs.dim == rhs.dim and rank(iso) == lhs.dim
    verdicts.append(DiagramVerdict("bijection", bijective))

    for i, (l2, beta) in enumerate(l_maps):
        if not is_right_comodule_map(beta, l, l2):
            raise PreconditionError(f"l_maps[{i}] is not a right comodule homomorphism")
        lefts, rights = [], []
        for vector in lhs.vectors():
            full = full_map(vector)
            moved = _curry(kron(beta, Matrix.identity(m.dim, f)) @ full, l2.dim, space)
            base = _curry(full, l.dim, space)
            if moved is None or base is None:
                break
            lefts.append(moved)
            rights.append(beta @ base)
        verdicts.append(_stacked_verdict(f"naturality_L[{i}]", lefts, rights, lhs.dim))

    for i, (n2, phi) in enumerate(n_maps):
        if not is_contramodule_map(phi, n2, n):
            raise PreconditionError(f"n_maps[{i}] is not a contramodule homomorphism")
        space2 = cohom_space(m, n2)
        h_phi = cohom_map(space2, space, phi)
        lefts, rights = [], []
        for vector in lhs.vectors():
            full = full_map(vector)
            moved = _curry(full @ phi, l.dim, space2)
            base = _curry(full, l.dim, space)
            if moved is None or base is None:
                break
            lefts.append(moved)
            rights.append(base @ h_phi)
        verdicts.append(_stacked_verdict(f"naturality_N[{i}]", lefts, rights, lhs.dim))

    report = AdjunctionReport(lhs.dim, rhs.dim, iso, tuple(verdicts))
    if not report.passed:
        logger.warning(f"adjunction check failed: {[d.diagram for d in report.verdicts if not d.passed]}")
    return report


def _stacked_verdict(name: str, lefts: List[Matrix], rights: List[Matrix], expected: int) -> DiagramVerdict:
    if len(lefts) != expected:
        return DiagramVerdict(name, False)
    if not lefts:
        return DiagramVerdict(name, True)
    return compare_composites(name, hstack(lefts), hstack(rights))
