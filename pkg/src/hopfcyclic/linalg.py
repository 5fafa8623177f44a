"""Exact sparse linear algebra over Q and Q(zeta_m).

Matrices store only nonzero entries.  Rank and kernel use exact Gaussian
elimination with a deterministic pivot order (lowest column, then lowest
row), so results are reproducible run to run.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import scalar_inv

DENSE_THRESHOLD = 512  # switch to list-based elimination at or below this many columns


class SparseMatrix:
    """Immutable-by-convention sparse matrix: map (row, col) -> nonzero scalar."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < nrows and 0 <= c < ncols):
                    raise ValueError(f"entry ({r},{c}) out of bounds")
                if v:
                    self.entries[(r, c)] = v

    @classmethod
    def identity(cls, n, one=Fraction(1)):
        return cls(n, n, {(i, i): one for i in range(n)})

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def from_rows(cls, rows, ncols=None):
        """Build from a list of dense row lists."""
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return cls(nrows, ncols, entries)

    @classmethod
    def from_columns(cls, cols, nrows):
        """Build from a list of sparse column dicts (row -> scalar)."""
        entries = {}
        for c, col in enumerate(cols):
            for r, v in col.items():
                if v:
                    entries[(r, c)] = v
        return cls(nrows, len(cols), entries)

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.nrows, self.ncols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)})"

    def get(self, r, c):
        return self.entries.get((r, c), 0)

    def transpose(self):
        return SparseMatrix(self.ncols, self.nrows,
                            {(c, r): v for (r, c), v in self.entries.items()})

    def row_dicts(self):
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def to_dense(self):
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __add__(self, other):
        self._check_shape(other)
        entries = dict(self.entries)
        for k, v in other.entries.items():
            w = entries.get(k, 0) + v
            if w:
                entries[k] = w
            else:
                entries.pop(k, None)
        return SparseMatrix(self.nrows, self.ncols, entries)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not c:
            return SparseMatrix(self.nrows, self.ncols)
        return SparseMatrix(self.nrows, self.ncols,
                            {k: c * v for k, v in self.entries.items()})

    def _check_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        cols_of_other = [dict() for _ in range(other.ncols)]
        for (r, c), v in other.entries.items():
            cols_of_other[c][r] = v
        entries = {}
        by_mid = [dict() for _ in range(self.ncols)]
        for (r, c), v in self.entries.items():
            by_mid[c][r] = v
        for c in range(other.ncols):
            acc = {}
            for mid, v in cols_of_other[c].items():
                for r, w in by_mid[mid].items():
                    s = acc.get(r, 0) + w * v
                    if s:
                        acc[r] = s
                    else:
                        acc.pop(r, None)
            for r, s in acc.items():
                entries[(r, c)] = s
        return SparseMatrix(self.nrows, other.ncols, entries)

    def apply(self, vec):
        """Apply to a sparse vector (dict col -> scalar); returns dict row -> scalar."""
        out = {}
        by_col = {}
        for (r, c), v in self.entries.items():
            by_col.setdefault(c, []).append((r, v))
        for c, x in vec.items():
            if not x:
                continue
            for r, v in by_col.get(c, ()):
                s = out.get(r, 0) + v * x
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def is_zero(self):
        return not self.entries

    def rank(self, dense_threshold=DENSE_THRESHOLD):
        if self.ncols <= dense_threshold and self.nrows * self.ncols <= 1 << 20:
            return _rank_dense(self.to_dense(), self.ncols)
        return _eliminate(self.row_dicts(), self.ncols)[1]

    def kernel_basis(self, dense_threshold=DENSE_THRESHOLD):
        """Exact basis of the right kernel, as sparse column dicts.

        One basis vector per free column of the reduced row echelon form.
        """
        rows = self.row_dicts()
        pivots, _ = _eliminate(rows, self.ncols, reduce=True)
        pivot_cols = dict(pivots)  # col -> row index in echelon list
        basis = []
        one = Fraction(1)
        for row in rows:
            for v in row.values():
                one = v / v
                break
            else:
                continue
            break
        for free in range(self.ncols):
            if free in pivot_cols:
                continue
            vec = {free: one}
            for col, ridx in pivot_cols.items():
                v = rows[ridx].get(free)
                if v:
                    vec[col] = -v
            basis.append(vec)
        return basis


def _eliminate(rows, ncols, reduce=False):
    """In-place row echelon form; returns (pivots as (col, row_index) list, rank).

    Pivot order: lowest column first, then lowest remaining row.
    With reduce=True, produces the reduced echelon form (pivots scaled to 1,
    pivot columns cleared everywhere).
    """
    pivots = []
    used = [False] * len(rows)
    for col in range(ncols):
        pivot = None
        for r in range(len(rows)):
            if not used[r] and rows[r].get(col):
                pivot = r
                break
        if pivot is None:
            continue
        used[pivot] = True
        pivots.append((col, pivot))
        prow = rows[pivot]
        inv = scalar_inv(prow[col])
        for c in list(prow):
            prow[c] = prow[c] * inv
        targets = range(len(rows)) if reduce else (
            r for r in range(len(rows)) if not used[r])
        for r in targets:
            if r == pivot:
                continue
            factor = rows[r].get(col)
            if not factor:
                continue
            row = rows[r]
            for c, v in prow.items():
                w = row.get(c, 0) - factor * v
                if w:
                    row[c] = w
                else:
                    row.pop(c, None)
    return pivots, len(pivots)


def _rank_dense(rows, ncols):
    nrows = len(rows)
    rank = 0
    row_start = 0
    for col in range(ncols):
        pivot = None
        for r in range(row_start, nrows):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[row_start], rows[pivot] = rows[pivot], rows[row_start]
        prow = rows[row_start]
        inv = scalar_inv(prow[col])
        for c in range(col, ncols):
            if prow[c]:
                prow[c] = prow[c] * inv
        for r in range(row_start + 1, nrows):
            factor = rows[r][col]
            if factor:
                row = rows[r]
                for c in range(col, ncols):
                    if prow[c]:
                        row[c] = row[c] - factor * prow[c]
        row_start += 1
        rank += 1
        if row_start == nrows:
            break
    return rank


def rank(matrix, dense_threshold=DENSE_THRESHOLD):
    return matrix.rank(dense_threshold=dense_threshold)


def kernel_basis(matrix, dense_threshold=DENSE_THRESHOLD):
    return matrix.kernel_basis(dense_threshold=dense_threshold)
