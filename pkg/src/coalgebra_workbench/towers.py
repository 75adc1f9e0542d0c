"""Finite towers of contramodules and their inverse limits."""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from .certify import certificate, compare_composites
from .coalgebra import Coalgebra, require_certified
from .comodules import Contramodule, check_contramodule
from .conventions import postcompose
from .errors import InvariantError, StructuralError, validate_same_base, validate_shape
from .linalg import Subspace, kernel_basis
from .matrix import Matrix, vstack
from .models import CertReport, DiagramVerdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteTower:
    """Z_0 <- Z_1 <- ... <- Z_T with transitions[i]: Z_{i+1} -> Z_i."""

    over: Coalgebra
    levels: Tuple[Contramodule, ...]
    transitions: Tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        if not self.levels:
            raise StructuralError("a tower needs at least one level", field="levels")
        if len(self.transitions) != len(self.levels) - 1:
            raise StructuralError(
                f"{len(self.levels)} levels need {len(self.levels) - 1} transitions, got {len(self.transitions)}",
                field="transitions",
            )
        for level in self.levels:
            validate_same_base(level.over, self.over, "levels")
        for i, f in enumerate(self.transitions):
            validate_shape(f, self.levels[i].dim, self.levels[i + 1].dim, f"transitions[{i}]")

    @property
    def field(self):
        return self.over.field

    @property
    def height(self) -> int:
        return len(self.transitions)


@dataclass(frozen=True)
class TowerLimit:
    """The limit with its inclusion into ∏ Z_i and its projections to each level."""

    contramodule: Contramodule
    inclusion: Matrix
    projections: Tuple[Matrix, ...]


def check_tower(t: FiniteTower) -> CertReport:
    """Certify every level and every transition (as a contramodule homomorphism)."""
    n = t.over.dim
    verdicts = []
    for i, level in enumerate(t.levels):
        for v in check_contramodule(level).verdicts:
            verdicts.append(DiagramVerdict(f"level[{i}].{v.diagram}", v.passed, v.witness))
    for i, f in enumerate(t.transitions):
        source, target = t.levels[i + 1], t.levels[i]
        verdicts.append(
            compare_composites(f"transition[{i}]", target.theta @ postcompose(f, n), f @ source.theta)
        )
    return certificate(f"tower of height {t.height} over {t.over}", *verdicts)


def _projection(offset: int, size: int, total: int, field) -> Matrix:
    return Matrix.from_function(size, total, lambda r, c: 1 if c == offset + r else 0, field)


def limit_cone(t: FiniteTower) -> TowerLimit:
    """The compatible tuples {(z_i) : f_i z_{i+1} = z_i} with the induced θ.

    Raises:
        PreconditionError: If a level or transition is not certified
        InvariantError: If the induced structure does not restrict or certify
    """
    require_certified(check_tower(t), "tower_limit")
    f, n = t.over.field, t.over.dim
    dims = [z.dim for z in t.levels]
    total = sum(dims)
    offsets = [sum(dims[:i]) for i in range(len(dims))]
    projections = [_projection(offsets[i], dims[i], total, f) for i in range(len(dims))]

    constraints: List[Matrix] = [
        t.transitions[i] @ projections[i + 1] - projections[i] for i in range(t.height)
    ]
    space: Subspace = kernel_basis(vstack(constraints, cols=total, field=f))

    product_theta = vstack(
        [z.theta @ postcompose(projections[i], n) for i, z in enumerate(t.levels)], cols=n * total, field=f
    )
    j, s = space.inclusion(), space.coordinate_map()
    theta = s @ product_theta @ postcompose(j, n)
    if j @ theta != product_theta @ postcompose(j, n):
        raise InvariantError("compatible tuples are not closed under θ", details={"height": t.height})
    limit = Contramodule(t.over, space.dim, theta)
    report = check_contramodule(limit)
    if not report.passed:
        raise InvariantError("tower limit fails the contramodule axioms", details=report.to_dict())
    logger.debug(f"tower limit of height {t.height}: dimension {space.dim} inside {total}")
    return TowerLimit(limit, j, tuple(p @ j for p in projections))


def tower_limit(t: FiniteTower) -> Contramodule:
    return limit_cone(t).contramodule
