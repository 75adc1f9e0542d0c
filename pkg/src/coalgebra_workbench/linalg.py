"""Row reduction, kernels, canonical subspaces and quotient maps."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import InvariantError, SingularMatrixError, StructuralError, validate_dimension
from .field import QQ, Element, FieldSpec
from .matrix import Matrix, hstack

logger = logging.getLogger(__name__)


def rref_with_pivots(m: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """Gauss-Jordan elimination.

    Returns:
        The reduced row echelon form (same shape as ``m``, zero rows last)
        and the tuple of pivot columns.
    """
    f = m.field
    rows: List[List[Element]] = [list(m.row(i)) for i in range(m.rows)]
    pivots: List[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = f.inverse(rows[r][c])
        rows[r] = [f.reduce(x * inv) for x in rows[r]]
        for i in range(m.rows):
            factor = rows[i][c]
            if i != r and factor != 0:
                rows[i] = [f.reduce(x - factor * y) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(m.rows, m.cols, tuple(x for row in rows for x in row), f), tuple(pivots)


def rref(m: Matrix) -> Matrix:
    return rref_with_pivots(m)[0]


def rank(m: Matrix) -> int:
    return len(rref_with_pivots(m)[1])


def inverse(m: Matrix) -> Matrix:
    """Inverse of a square matrix.

    Raises:
        SingularMatrixError: If ``m`` is not invertible
    """
    if m.rows != m.cols:
        raise SingularMatrixError(f"a {m.rows}x{m.cols} matrix has no inverse")
    n = m.rows
    reduced, pivots = rref_with_pivots(hstack([m, Matrix.identity(n, m.field)], rows=n, field=m.field))
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrixError("matrix is singular", details={"rank": sum(1 for p in pivots if p < n)})
    return reduced.select_columns(list(range(n, 2 * n)))


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^ambient_dim given by its canonical RREF basis.

    The rows of ``basis`` are nonzero, in RREF, with strictly increasing
    pivots; two subspaces are equal exactly when their bases are equal.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        validate_dimension(self.ambient_dim, "ambient_dim")
        if self.basis.cols != self.ambient_dim:
            raise StructuralError(
                f"basis vectors have length {self.basis.cols}, ambient dimension is {self.ambient_dim}",
                field="basis",
            )
        if not self.is_canonical():
            raise StructuralError("basis must be in reduced row echelon form without zero rows", field="basis")

    @classmethod
    def spanned_by(cls, vectors: Sequence[Sequence], ambient_dim: int, field: FieldSpec = QQ) -> "Subspace":
        stacked = Matrix.from_rows([list(v) for v in vectors], field, cols=ambient_dim)
        reduced, pivots = rref_with_pivots(stacked)
        return cls(ambient_dim, reduced.select_rows(list(range(len(pivots)))))

    @classmethod
    def column_space(cls, m: Matrix) -> "Subspace":
        return cls.spanned_by([m.column(j) for j in range(m.cols)], m.rows, m.field)

    @classmethod
    def zero(cls, ambient_dim: int, field: FieldSpec = QQ) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim, field))

    @classmethod
    def full(cls, ambient_dim: int, field: FieldSpec = QQ) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim, field))

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(self.basis.row(i)) if x != 0) for i in range(self.dim))

    def vectors(self) -> List[Tuple[Element, ...]]:
        return [self.basis.row(i) for i in range(self.dim)]

    def is_canonical(self) -> bool:
        """Nonzero rows, pivots equal to 1 and strictly increasing, pivot columns otherwise zero."""
        b = self.basis
        last = -1
        for i in range(b.rows):
            row = b.row(i)
            pivot = next((j for j, x in enumerate(row) if x != 0), None)
            if pivot is None or pivot <= last or row[pivot] != 1:
                return False
            if any(b[k, pivot] != 0 for k in range(b.rows) if k != i):
                return False
            last = pivot
        return True

    def _as_tuple(self, vector) -> Tuple[Element, ...]:
        if isinstance(vector, Matrix):
            values = vector.entries
        else:
            values = tuple(self.field.element(x) for x in vector)
        if len(values) != self.ambient_dim:
            raise StructuralError(
                f"vector of length {len(values)} in a space of dimension {self.ambient_dim}",
                field="vector",
            )
        return values

    def _reconstruct(self, coords: Sequence[Element]) -> Tuple[Element, ...]:
        out = [0] * self.ambient_dim
        for c, i in zip(coords, range(self.dim)):
            if c:
                for j, x in enumerate(self.basis.row(i)):
                    if x:
                        out[j] += c * x
        return tuple(self.field.reduce(x) for x in out)

    def coordinates(self, vector) -> Optional[Tuple[Element, ...]]:
        """Coordinates of ``vector`` in the canonical basis, or ``None`` if outside."""
        values = self._as_tuple(vector)
        coords = tuple(values[p] for p in self.pivots)
        if self._reconstruct(coords) != values:
            return None
        return coords

    def contains(self, vector) -> bool:
        return self.coordinates(vector) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def inclusion(self) -> Matrix:
        """The ambient_dim x dim matrix whose columns are the basis vectors."""
        return self.basis.transpose()

    def coordinate_map(self) -> Matrix:
        """Left inverse of :meth:`inclusion`: reads the pivot coordinates."""
        pivots = self.pivots
        return Matrix.from_function(
            self.dim, self.ambient_dim, lambda i, j: 1 if j == pivots[i] else 0, self.field
        )

    def vector_coordinates(self, vector) -> Tuple[Element, ...]:
        """Like :meth:`coordinates` but raises when the vector is outside."""
        coords = self.coordinates(vector)
        if coords is None:
            raise InvariantError("vector does not lie in the subspace", details={"ambient_dim": self.ambient_dim})
        return coords


def kernel_basis(m: Matrix) -> Subspace:
    """The canonical basis of {v : m v = 0}."""
    f = m.field
    reduced, pivots = rref_with_pivots(m)
    pivot_set = set(pivots)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [0] * m.cols
        v[free] = 1
        for k, p in enumerate(pivots):
            v[p] = f.reduce(-reduced[k, free])
        vectors.append(v)
    space = Subspace.spanned_by(vectors, m.cols, f)
    logger.debug(f"kernel of a {m.rows}x{m.cols} system: rank {len(pivots)}, dimension {space.dim}")
    return space


def quotient_map(ambient_dim: int, s: Subspace) -> Matrix:
    """A surjection k^ambient -> k^(ambient - dim s) with kernel exactly ``s``.

    The complement is spanned by the standard vectors at the non-pivot
    positions of ``s``; a vector v maps to the non-pivot coordinates of
    v - sum_k v[p_k] b_k.
    """
    if s.ambient_dim != ambient_dim:
        raise StructuralError(
            f"subspace lives in dimension {s.ambient_dim}, not {ambient_dim}",
            field="ambient_dim",
        )
    f = s.field
    pivots = s.pivots
    pivot_set = set(pivots)
    non_pivots = [j for j in range(ambient_dim) if j not in pivot_set]
    # (I - B^T E_p) clears the pivot coordinates; then keep the others.
    projector = Matrix.identity(ambient_dim, f) - s.inclusion() @ s.coordinate_map()
    return projector.select_rows(non_pivots)
