"""
WHQ Engine - Exact Matrices

Immutable dictionary-of-keys matrices over an exact field, with the
Kronecker product in row-major convention (e_i ⊗ e_j -> i*d + j) and
fraction-free Bareiss elimination.

Only nonzero entries are stored, so two matrices are equal exactly when
their shapes, fields and entry dictionaries agree.
"""
from collections import defaultdict
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import MixedFields, Singular
from .exact import Field, Scalar

Row = Dict[int, Scalar]


@dataclass(frozen=True)
class ExactMatrix:
    """Sparse exact matrix of shape ``rows`` x ``cols``."""

    rows: int
    cols: int
    field: Field
    entries: Mapping[Tuple[int, int], Scalar] = dataclass_field(default_factory=dict)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_entries(cls, rows: int, cols: int, field: Field, entries) -> "ExactMatrix":
        """Build from ``{(i, j): value}`` or ``(i, j, value)`` triples, dropping zeros."""
        items = entries.items() if isinstance(entries, Mapping) else ((i, j, v) for i, j, v in entries)
        clean = {}
        for item in items:
            (i, j), v = (item[0], item[1]) if len(item) == 2 else ((item[0], item[1]), item[2])
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            v = field.coerce(v)
            if v:
                clean[(i, j)] = v
        return cls(rows, cols, field, clean)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], field: Field) -> "ExactMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls.from_entries(
            rows, cols, field, {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row)}
        )

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "ExactMatrix":
        return cls(rows, cols, field, {})

    @classmethod
    def identity(cls, n: int, field: Field) -> "ExactMatrix":
        return cls(n, n, field, {(i, i): field.one for i in range(n)})

    @classmethod
    def permutation(cls, images: Sequence[int], field: Field) -> "ExactMatrix":
        """Matrix sending e_j to e_{images[j]}."""
        n = len(images)
        return cls(n, n, field, {(images[j], j): field.one for j in range(n)})

    def to_rows(self) -> List[List[Scalar]]:
        zero = self.field.zero
        out = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: Tuple[int, int]) -> Scalar:
        return self.entries.get(key, self.field.zero)

    def is_zero(self) -> bool:
        return not self.entries

    # -- arithmetic -------------------------------------------------------

    def _check_field(self, other: "ExactMatrix") -> None:
        if self.field != other.field:
            raise MixedFields(f"{self.field} matrix combined with {other.field} matrix")

    @cached_property
    def _by_row(self) -> Dict[int, List[Tuple[int, Scalar]]]:
        index = defaultdict(list)
        for (i, j), v in self.entries.items():
            index[i].append((j, v))
        return index

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        out: Dict[Tuple[int, int], Scalar] = {}
        right = other._by_row
        for (i, k), a in self.entries.items():
            for j, b in right.get(k, ()):
                out[(i, j)] = out.get((i, j), zero) + a * b
        return ExactMatrix(self.rows, other.cols, self.field, {k: v for k, v in out.items() if v})

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        r, c = other.rows, other.cols
        out = {}
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                out[(i * r + k, j * c + l)] = a * b
        return ExactMatrix(self.rows * r, self.cols * c, self.field, out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, self.field, {(j, i): v for (i, j), v in self.entries.items()})

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def _combine(self, other: "ExactMatrix", sign: int) -> "ExactMatrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape {self.shape} vs {other.shape}")
        out = dict(self.entries)
        zero = self.field.zero
        for key, v in other.entries.items():
            out[key] = out.get(key, zero) + v if sign > 0 else out.get(key, zero) - v
        return ExactMatrix(self.rows, self.cols, self.field, {k: v for k, v in out.items() if v})

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self._combine(other, -1)

    def scale(self, c) -> "ExactMatrix":
        c = self.field.coerce(c)
        return ExactMatrix(self.rows, self.cols, self.field, {k: v * c for k, v in self.entries.items() if v * c})

    def columns(self, indices: Sequence[int]) -> "ExactMatrix":
        where = {j: n for n, j in enumerate(indices)}
        return ExactMatrix(
            self.rows,
            len(indices),
            self.field,
            {(i, where[j]): v for (i, j), v in self.entries.items() if j in where},
        )

    def row_dicts(self) -> List[Row]:
        out: List[Row] = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    @classmethod
    def from_row_dicts(cls, rows: Sequence[Row], cols: int, field: Field) -> "ExactMatrix":
        return cls(len(rows), cols, field, {(i, j): v for i, row in enumerate(rows) for j, v in row.items() if v})

    # -- elimination ------------------------------------------------------

    @cached_property
    def _rref(self) -> Tuple[Tuple[Row, ...], Tuple[int, ...]]:
        rows, pivots = bareiss_echelon(self.row_dicts(), self.cols, self.field)
        return tuple(reduce_echelon(rows, pivots, self.field)), tuple(pivots)

    def rref(self) -> Tuple["ExactMatrix", Tuple[int, ...]]:
        """Nonzero rows of the reduced row echelon form, and the pivot columns."""
        rows, pivots = self._rref
        return ExactMatrix.from_row_dicts(rows, self.cols, self.field), pivots

    @property
    def rank(self) -> int:
        return len(self._rref[1])

    def kernel(self) -> "ExactMatrix":
        """Basis of the null space as the columns of a ``cols`` x k matrix."""
        rows, pivots = self._rref
        free = [c for c in range(self.cols) if c not in set(pivots)]
        out = {}
        for n, f in enumerate(free):
            out[(f, n)] = self.field.one
            for row, p in zip(rows, pivots):
                v = row.get(f)
                if v:
                    out[(p, n)] = -v
        return ExactMatrix(self.cols, len(free), self.field, out)

    def cokernel(self) -> "ExactMatrix":
        """Quotient map onto ``rows`` / image: a k x ``rows`` matrix Q with Q @ self = 0."""
        return self.transpose().kernel().transpose()

    def column_space(self) -> "ExactMatrix":
        """Canonical basis (reduced echelon rows of the transpose) of the column space."""
        return self.transpose().rref()[0]

    def same_column_space(self, other: "ExactMatrix") -> bool:
        if self.rows != other.rows:
            return False
        return self.column_space() == other.column_space()

    def inverse(self, label: str = "map") -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError(f"cannot invert a {self.rows}x{self.cols} matrix")
        n = self.rows
        if self.rank < n:
            raise Singular(self.rank, n, label)
        augmented = self.row_dicts()
        for i in range(n):
            augmented[i][n + i] = self.field.one
        rows, pivots = bareiss_echelon(augmented, 2 * n, self.field)
        rows = reduce_echelon(rows, pivots, self.field)
        return ExactMatrix(
            n,
            n,
            self.field,
            {(i, j - n): v for i, row in enumerate(rows) for j, v in row.items() if j >= n},
        )

    def right_inverse(self) -> "ExactMatrix":
        """Some X with self @ X = identity; requires full row rank."""
        if self.rank < self.rows:
            raise Singular(self.rank, self.rows, "quotient map")
        pivots = self._rref[1]
        square = self.columns(pivots).inverse()
        return ExactMatrix(
            self.cols,
            self.rows,
            self.field,
            {(pivots[i], j): v for (i, j), v in square.entries.items()},
        )

    def rank_factorization(self) -> Tuple["ExactMatrix", "ExactMatrix"]:
        """C, R with self = C @ R, C made of pivot columns, R the nonzero RREF rows."""
        rref, pivots = self.rref()
        return self.columns(pivots), rref

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field}, nnz={len(self.entries)})"


def bareiss_echelon(rows: List[Row], ncols: int, field: Field) -> Tuple[List[Row], List[int]]:
    """Fraction-free forward elimination with first-nonzero pivot selection.

    Returns the nonzero echelon rows and their pivot columns. Input rows are
    not modified.
    """
    rows = [dict(r) for r in rows]
    zero = field.zero
    previous = field.one
    pivots: List[int] = []
    top = 0
    for col in range(ncols):
        found = next((i for i in range(top, len(rows)) if col in rows[i]), None)
        if found is None:
            continue
        rows[top], rows[found] = rows[found], rows[top]
        pivot_row = rows[top]
        a = pivot_row[col]
        for i in range(top + 1, len(rows)):
            row = rows[i]
            b = row.get(col)
            if b is None:
                factor = a / previous
                rows[i] = {k: v * factor for k, v in row.items()}
                continue
            updated = {}
            for k in row.keys() | pivot_row.keys():
                v = (a * row.get(k, zero) - b * pivot_row.get(k, zero)) / previous
                if v:
                    updated[k] = v
            rows[i] = updated
        previous = a
        pivots.append(col)
        top += 1
    return rows[:top], pivots


def reduce_echelon(rows: Sequence[Row], pivots: Sequence[int], field: Field) -> List[Row]:
    """Normalize pivots to one and clear above them."""
    zero = field.zero
    out = []
    for row, p in zip(rows, pivots):
        inv = field.one / row[p]
        out.append({k: v * inv for k, v in row.items()})
    for n in range(len(out) - 1, -1, -1):
        p = pivots[n]
        for m in range(n):
            c = out[m].get(p)
            if c:
                target = out[m]
                for k, v in out[n].items():
                    w = target.get(k, zero) - c * v
                    if w:
                        target[k] = w
                    else:
                        target.pop(k, None)
    return out


def block_diagonal(blocks: Iterable[ExactMatrix], field: Field) -> ExactMatrix:
    out = {}
    r = c = 0
    for b in blocks:
        for (i, j), v in b.entries.items():
            out[(r + i, c + j)] = v
        r += b.rows
        c += b.cols
    return ExactMatrix(r, c, field, out)


def vector(values: Sequence, field: Field) -> ExactMatrix:
    """Column vector."""
    return ExactMatrix.from_entries(len(values), 1, field, {(i, 0): v for i, v in enumerate(values)})


def optional_equal(a: Optional[ExactMatrix], b: Optional[ExactMatrix]) -> bool:
    if a is None or b is None:
        return a is b
    return a == b
