"""
Sparse exact matrices over the Gaussian rationals.

Matrices are stored by column, ``cols[j] = {row: value}``, because module
generators are built one basis image at a time.  Only the operations the
module layer needs are provided: products, sums, conjugate transpose,
row reduction, kernels and restriction to invariant subspaces.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = ["Matrix", "SparseVec", "add_into", "generalized_eigenspace"]

SparseVec = dict  # row index -> nonzero Scalar


def add_into(acc: SparseVec, vec: SparseVec, coeff: Scalar = ONE) -> None:
    """``acc += coeff * vec`` in place, dropping cancelled entries."""
    unit = coeff == ONE
    for r, v in vec.items():
        x = acc.get(r)
        nv = v if unit else coeff * v
        if x is None:
            acc[r] = nv
        else:
            s = x + nv
            if s:
                acc[r] = s
            else:
                del acc[r]


class Matrix:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Optional[Sequence[SparseVec]] = None):
        self.nrows = nrows
        self.ncols = ncols
        if cols is None:
            cols = [{} for _ in range(ncols)]
        if len(cols) != ncols:
            raise ValueError("column count mismatch")
        self.cols = [{r: v for r, v in c.items() if v} for c in cols]

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: Optional[int] = None) -> Matrix:
        return cls(nrows, nrows if ncols is None else ncols)

    @classmethod
    def identity(cls, n: int, scale=ONE) -> Matrix:
        scale = as_scalar(scale)
        if not scale:
            return cls(n, n)
        return cls(n, n, [{j: scale} for j in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [{} for _ in range(ncols)]
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                v = as_scalar(v)
                if v:
                    cols[c][r] = v
        return cls(nrows, ncols, cols)

    @classmethod
    def from_columns(cls, nrows: int, cols: Sequence[SparseVec]) -> Matrix:
        return cls(nrows, len(cols), [dict(c) for c in cols])

    def to_rows(self) -> list[list[Scalar]]:
        rows = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                rows[r][c] = v
        return rows

    def row_dicts(self) -> list[SparseVec]:
        rows = [{} for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                rows[r][c] = v
        return rows

    # -- algebra --------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def apply(self, vec: SparseVec) -> SparseVec:
        out: SparseVec = {}
        cols = self.cols
        for c, v in vec.items():
            add_into(out, cols[c], v)
        return out

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = [dict(c) for c in self.cols]
        for acc, c in zip(out, other.cols):
            add_into(acc, c)
        return Matrix(self.nrows, self.ncols, out)

    def __neg__(self) -> Matrix:
        return Matrix(self.nrows, self.ncols, [{r: -v for r, v in c.items()} for c in self.cols])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, s) -> Matrix:
        s = as_scalar(s)
        return Matrix(self.nrows, self.ncols, [{r: s * v for r, v in c.items()} for c in self.cols])

    def shift(self, s) -> Matrix:
        """``self - s * I``."""
        s = as_scalar(s)
        if not s:
            return self
        return self - Matrix.identity(self.nrows, s)

    def conj_transpose(self) -> Matrix:
        cols = [{} for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                cols[r][c] = v.conjugate()
        return Matrix(self.ncols, self.nrows, cols)

    def transpose(self) -> Matrix:
        cols = [{} for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                cols[r][c] = v
        return Matrix(self.ncols, self.nrows, cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(c == {j: ONE} for j, c in enumerate(self.cols))

    def is_zero(self) -> bool:
        return not any(self.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        pos = {r: k for k, r in enumerate(rows)}
        out = []
        for c in cols:
            out.append({pos[r]: v for r, v in self.cols[c].items() if r in pos})
        return Matrix(len(rows), len(cols), out)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # -- elimination ----------------------------------------------------------

    def rref(self) -> tuple[list[SparseVec], list[int]]:
        """Reduced row echelon form as sparse rows plus pivot columns."""
        rows = [r for r in self.row_dicts() if r]
        pivots: list[int] = []
        reduced: list[SparseVec] = []
        by_pivot: dict[int, SparseVec] = {}
        for row in rows:
            row = dict(row)
            # eliminate existing pivots from the incoming row
            changed = True
            while changed and row:
                changed = False
                for p in sorted(set(row) & by_pivot.keys()):
                    c = row.get(p)
                    if c:
                        add_into(row, by_pivot[p], -c)
                        changed = True
            if not row:
                continue
            p = min(row)
            inv = row[p].inverse()
            row = {k: v * inv for k, v in row.items()}
            # back-substitute into earlier rows
            for q, other in by_pivot.items():
                c = other.get(p)
                if c:
                    add_into(other, row, -c)
            by_pivot[p] = row
        for p in sorted(by_pivot):
            pivots.append(p)
            reduced.append(by_pivot[p])
        return reduced, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> tuple[Matrix, list[int]]:
        """Kernel basis ``B`` (as columns) and the free columns.

        ``B`` restricted to the free-column rows is the identity, so
        coordinates of a kernel vector are read off at those rows.
        """
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free:
            vec: SparseVec = {f: ONE}
            for p, row in zip(pivots, reduced):
                v = row.get(f)
                if v:
                    vec[p] = -v
            basis.append(vec)
        return Matrix(self.ncols, len(free), basis), free


def generalized_eigenspace(mat: Matrix, a) -> tuple[Matrix, list[int]]:
    """Basis of ``ker (mat - a)^N`` for large N, with its free-row indices.

    Powers are taken until the kernel stops growing, which happens no later
    than the ambient dimension.
    """
    shifted = mat.shift(a)
    power = shifted
    basis, free = power.nullspace()
    while basis.ncols and basis.ncols < mat.nrows:
        power = power @ shifted
        nb, nf = power.nullspace()
        if nb.ncols == basis.ncols:
            break
        basis, free = nb, nf
    return basis, free


def restrict(mat: Matrix, basis: Matrix, free: Sequence[int]) -> Optional[Matrix]:
    """Matrix of ``mat`` on ``span(basis)``, or None if the span is not invariant."""
    image = mat @ basis
    coords = image.submatrix(free, range(image.ncols))
    if basis @ coords != image:
        return None
    return coords
