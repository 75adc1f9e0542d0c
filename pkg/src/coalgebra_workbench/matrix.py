"""Dense exact matrices.

A matrix with ``rows`` x ``cols`` entries is a linear map k^cols -> k^rows;
column j is the image of the basis vector e_j. Entries are stored row-major.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import StructuralError, validate_dimension, validate_same_field
from .field import QQ, Element, FieldSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matrix:
    """An immutable matrix over an exact field.

    Attributes:
        rows: Number of rows (dimension of the codomain)
        cols: Number of columns (dimension of the domain)
        entries: Row-major entries, coerced into ``field`` on construction
        field: The base field
    """

    rows: int
    cols: int
    entries: Tuple[Element, ...]
    field: FieldSpec = QQ

    def __post_init__(self):
        validate_dimension(self.rows, "rows")
        validate_dimension(self.cols, "cols")
        entries = tuple(self.field.element(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise StructuralError(
                f"a {self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(entries)}",
                field="entries",
            )
        object.__setattr__(self, "entries", entries)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec = QQ, cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        if cols is not None and rows and width != cols:
            raise StructuralError(f"expected rows of length {cols}, got {width}", field="rows")
        for r in rows:
            if len(r) != width:
                raise StructuralError("ragged rows", field="rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: FieldSpec = QQ, rows: Optional[int] = None) -> "Matrix":
        columns = [list(c) for c in columns]
        height = len(columns[0]) if columns else (rows or 0)
        for c in columns:
            if len(c) != height:
                raise StructuralError("ragged columns", field="columns")
        return cls(height, len(columns), tuple(columns[j][i] for i in range(height) for j in range(len(columns))), field)

    @classmethod
    def from_function(cls, rows: int, cols: int, fn: Callable[[int, int], Element], field: FieldSpec = QQ) -> "Matrix":
        return cls(rows, cols, tuple(fn(i, j) for i in range(rows) for j in range(cols)), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = QQ) -> "Matrix":
        return cls(rows, cols, (0,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> "Matrix":
        return cls.from_function(n, n, lambda i, j: 1 if i == j else 0, field)

    @classmethod
    def column_vector(cls, values: Iterable, field: FieldSpec = QQ) -> "Matrix":
        values = tuple(values)
        return cls(len(values), 1, values, field)

    @classmethod
    def unit_vector(cls, n: int, index: int, field: FieldSpec = QQ) -> "Matrix":
        return cls(n, 1, tuple(1 if i == index else 0 for i in range(n)), field)

    @classmethod
    def permutation(cls, images: Sequence[int], field: FieldSpec = QQ) -> "Matrix":
        """The matrix sending e_s to e_{images[s]}."""
        n = len(images)
        if sorted(images) != list(range(n)):
            raise StructuralError("images do not form a permutation", field="images")
        entries = [0] * (n * n)
        for source, target in enumerate(images):
            entries[target * n + source] = 1
        return cls(n, n, tuple(entries), field)

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> Element:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Element, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Element, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> List[List[Element]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_strings(self) -> List[List[Union[int, str]]]:
        return [[self.field.format(x) for x in self.row(i)] for i in range(self.rows)]

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(len(indices), self.cols, tuple(x for i in indices for x in self.row(i)), self.field)

    def select_columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix.from_function(self.rows, len(indices), lambda i, j: self[i, indices[j]], self.field)

    def first_difference(self, other: "Matrix") -> Optional[int]:
        """Index of the first column where ``self`` and ``other`` disagree."""
        if self.shape != other.shape:
            raise StructuralError(f"cannot compare {self.shape} with {other.shape}", field="shape")
        for j in range(self.cols):
            if self.column(j) != other.column(j):
                return j
        return None

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_permutation(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            row = self.row(i)
            if sorted(row) != [0] * (self.cols - 1) + [1]:
                return False
        return all(sorted(self.column(j)) == [0] * (self.rows - 1) + [1] for j in range(self.cols))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix.from_function(self.cols, self.rows, lambda i, j: self.entries[j * self.cols + i], self.field)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def _check_same_shape(self, other: "Matrix") -> None:
        validate_same_field(self, other, "matrix")
        if self.shape != other.shape:
            raise StructuralError(f"shapes {self.shape} and {other.shape} differ", field="shape")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)), self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)), self.field)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries), self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        validate_same_field(self, other, "matrix")
        if self.cols != other.rows:
            raise StructuralError(
                f"cannot compose a {self.rows}x{self.cols} matrix after a {other.rows}x{other.cols} one",
                field="shape",
            )
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out: List[Element] = []
        for i in range(n):
            acc = [0] * p
            for k in range(m):
                x = a[i * m + k]
                if x:
                    base = k * p
                    for j in range(p):
                        y = b[base + j]
                        if y:
                            acc[j] += x * y
            out.extend(acc)
        return Matrix(n, p, tuple(out), self.field)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over {self.field.label}: {self.to_strings()})"


def kron(f: Matrix, g: Matrix) -> Matrix:
    """Tensor product of linear maps: (f⊗g)(e_i⊗e_j) = f(e_i)⊗g(e_j)."""
    validate_same_field(f, g, "kron")
    rows, cols = f.rows * g.rows, f.cols * g.cols
    entries = [0] * (rows * cols)
    for r1 in range(f.rows):
        for c1 in range(f.cols):
            x = f.entries[r1 * f.cols + c1]
            if not x:
                continue
            for r2 in range(g.rows):
                row_base = (r1 * g.rows + r2) * cols + c1 * g.cols
                for c2 in range(g.cols):
                    y = g.entries[r2 * g.cols + c2]
                    if y:
                        entries[row_base + c2] = x * y
    return Matrix(rows, cols, tuple(entries), f.field)


def dual_map(f: Matrix) -> Matrix:
    """f* : (k^rows)* -> (k^cols)* in dual bases, i.e. the transpose."""
    return f.transpose()


def hstack(blocks: Sequence[Matrix], rows: Optional[int] = None, field: FieldSpec = QQ) -> Matrix:
    if not blocks:
        return Matrix.zeros(rows or 0, 0, field)
    height = blocks[0].rows
    for b in blocks:
        if b.rows != height:
            raise StructuralError("hstack needs equal row counts", field="shape")
    return Matrix.from_rows([[x for b in blocks for x in b.row(i)] for i in range(height)], blocks[0].field,
                            cols=sum(b.cols for b in blocks))


def vstack(blocks: Sequence[Matrix], cols: Optional[int] = None, field: FieldSpec = QQ) -> Matrix:
    if not blocks:
        return Matrix.zeros(0, cols or 0, field)
    width = blocks[0].cols
    for b in blocks:
        if b.cols != width:
            raise StructuralError("vstack needs equal column counts", field="shape")
    return Matrix(sum(b.rows for b in blocks), width, tuple(x for b in blocks for x in b.entries), blocks[0].field)
