"""Coordinate conventions for tensors, Hom-spaces and duals.

Every module computes in these coordinates:

* tensor: e_i⊗e_j in k^a⊗k^b has coordinate ``i*b + j`` (Kronecker order);
* hom: a map k^a -> k^b is a b x a matrix M, and Hom(k^a, k^b) = k^(b*a) by
  stacking columns, so M[r, c] has coordinate ``c*b + r``;
* dual: (k^n)* = k^n through the dual basis, and f* is the transpose.

With these choices the canonical maps (A⊗B)* -> A*⊗B* and X -> X** are
identities on coordinates.
"""

import logging
from functools import lru_cache
from typing import Callable

from .field import QQ, FieldSpec
from .linalg import Subspace, kernel_basis
from .matrix import Matrix, kron

logger = logging.getLogger(__name__)


def tensor_index(b_dim: int, i: int, j: int) -> int:
    """Coordinate of e_i⊗e_j in k^a⊗k^b."""
    return i * b_dim + j


def hom_index(cod_dim: int, row: int, col: int) -> int:
    """Coordinate of the matrix unit E_{row,col} in Hom(k^a, k^cod_dim)."""
    return col * cod_dim + row


def vec(m: Matrix) -> Matrix:
    """Hom-coordinates of ``m`` as a column vector."""
    return Matrix.column_vector((m.entries[r * m.cols + c] for c in range(m.cols) for r in range(m.rows)), m.field)


def unvec(v, rows: int, cols: int, field: FieldSpec = None) -> Matrix:
    """Inverse of :func:`vec`; ``v`` is a column vector or a sequence."""
    if isinstance(v, Matrix):
        values, field = v.entries, v.field
    else:
        values = tuple(v)
        field = field or QQ
    return Matrix.from_function(rows, cols, lambda r, c: values[c * rows + r], field)


def swap(a_dim: int, b_dim: int, field: FieldSpec = QQ) -> Matrix:
    """The flip k^a⊗k^b -> k^b⊗k^a, e_i⊗e_j -> e_j⊗e_i."""
    images = [0] * (a_dim * b_dim)
    for i in range(a_dim):
        for j in range(b_dim):
            images[tensor_index(b_dim, i, j)] = tensor_index(a_dim, j, i)
    return Matrix.permutation(images, field)


def precompose(g: Matrix, z_dim: int) -> Matrix:
    """The operator Hom(A', Z) -> Hom(A, Z), F -> F∘g, for g: A -> A'."""
    return kron(g.transpose(), Matrix.identity(z_dim, g.field))


def postcompose(h: Matrix, a_dim: int) -> Matrix:
    """The operator Hom(A, Z) -> Hom(A, Z'), F -> h∘F, for h: Z -> Z'."""
    return kron(Matrix.identity(a_dim, h.field), h)


@lru_cache(maxsize=256)
def psi(a_dim: int, b_dim: int, z_dim: int, field: FieldSpec = QQ) -> Matrix:
    """ψ: Hom(A, Hom(B, Z)) -> Hom(A⊗B, Z), ψ(γ)(a⊗b) = γ(a)(b).

    Built from the evaluation identity on basis elements: the γ sending e_i
    to the map (e_j -> e_r) goes to the map sending e_i⊗e_j to e_r.
    """
    images = [0] * (a_dim * b_dim * z_dim)
    for i in range(a_dim):
        for j in range(b_dim):
            for r in range(z_dim):
                inner = hom_index(z_dim, r, j)
                source = hom_index(b_dim * z_dim, inner, i)
                target = hom_index(z_dim, r, tensor_index(b_dim, i, j))
                images[source] = target
    logger.debug(f"built psi({a_dim}, {b_dim}, {z_dim}) over {field.label}")
    return Matrix.permutation(images, field)


def psi_bar(d_dim: int, n_dim: int, m_dim: int, field: FieldSpec = QQ) -> Matrix:
    """ψ̄: Hom(Hom(D, N), M) -> Hom(N, M⊗D), obtained from ψ by duality.

    Hom(D, N) is read as D*⊗N and M⊗D as Hom(D*, M); then ψ̄ is ψ^{D*}_{N,M}
    inverted, between the two swaps. On elements, ψ̄(G)(n) = Σ_i G(e_i*⊗n)⊗e_i.
    """
    to_d_first = swap(n_dim, d_dim, field)  # N⊗D* -> D*⊗N
    to_m_first = swap(d_dim, m_dim, field)  # D*⊗M -> M⊗D
    return (
        postcompose(to_m_first, n_dim)
        @ psi(n_dim, d_dim, m_dim, field).transpose()
        @ precompose(to_d_first, m_dim)
    )


def hom_operator(equation: Callable[[Matrix], Matrix], rows: int, cols: int, field: FieldSpec = QQ) -> Matrix:
    """Matrix of a linear operator on Hom(k^cols, k^rows), by evaluating it on matrix units."""
    size = rows * cols
    columns = []
    for t in range(size):
        alpha = unvec(Matrix.unit_vector(size, t, field), rows, cols)
        columns.append(vec(equation(alpha)).entries)
    if not columns:
        return Matrix.zeros(0, 0, field)
    return Matrix.from_columns(columns, field)


def hom_solution_space(equation: Callable[[Matrix], Matrix], rows: int, cols: int,
                       field: FieldSpec = QQ) -> Subspace:
    """All α: k^cols -> k^rows with ``equation(α) == 0``, in Hom-coordinates.

    ``equation`` must be linear in α.
    """
    system = hom_operator(equation, rows, cols, field)
    if system.cols == 0:
        return Subspace.zero(rows * cols, field)
    if system.rows == 0:
        return Subspace.full(rows * cols, field)
    return kernel_basis(system)
