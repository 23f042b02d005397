"""Exact integer matrix algebra.

Everything here works on Python ints, so there is no overflow at any
intermediate step. Matrices are small (a few dozen rows at most), which
keeps the pure-Python row/column operations fast enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence


class IntMatrix:
    """Immutable integer matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ValueError("column length does not match row count")
        return cls(rows, len(columns), (columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: Optional[int] = None, cols: Optional[int] = None) -> "IntMatrix":
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls.from_rows(out, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.to_rows(), self.cols)

    def apply(self, vector: Sequence[int]) -> list[int]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ValueError(f"vector length {len(vector)} does not match {self.cols} columns")
        c = self.cols
        e = self.entries
        return [sum(e[i * c + j] * vector[j] for j in range(c) if vector[j]) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a = self.to_rows()
        b = other.to_rows()
        out = []
        for ai in a:
            acc = [0] * other.cols
            for k, x in enumerate(ai):
                if x:
                    bk = b[k]
                    for j in range(other.cols):
                        acc[j] += x * bk[j]
            out.append(acc)
        return IntMatrix.from_rows(out, other.cols)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, (x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, (x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, (-x for x in self.entries))

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, (k * x for x in self.entries))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix.from_rows([a + b for a, b in zip(self.to_rows(), other.to_rows())],
                                   self.cols + other.cols)

    def with_entry(self, i: int, j: int, value: int) -> "IntMatrix":
        entries = list(self.entries)
        entries[i * self.cols + j] = value
        return IntMatrix(self.rows, self.cols, entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix.from_rows({self.to_rows()!r}, cols={self.cols})"

    def __str__(self) -> str:
        rows = self.to_rows()
        if not rows or not self.cols:
            return f"<{self.rows}x{self.cols} matrix>"
        width = max(len(str(x)) for x in self.entries)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in rows)


@dataclass(frozen=True)
class SnfDecomposition:
    """``U @ M @ V == S`` with ``U``, ``V`` unimodular and ``S`` in Smith form."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i, i] for i in range(min(self.S.rows, self.S.cols))]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _identity_rows(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(m: IntMatrix) -> SnfDecomposition:
    """Smith normal form with both unimodular transforms.

    Pivots are chosen as the smallest nonzero entry (in absolute value) of
    the remaining block.  Row operations are mirrored into ``U`` and column
    operations into ``V``.
    """
    nr, nc = m.rows, m.cols
    a = m.to_rows()
    u = _identity_rows(nr)
    v = _identity_rows(nc)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        ad, as_ = a[dst], a[src]
        for c in range(nc):
            if as_[c]:
                ad[c] += q * as_[c]
        ud, us = u[dst], u[src]
        for c in range(nr):
            if us[c]:
                ud[c] += q * us[c]

    def add_col(dst, src, q):
        for r in a:
            if r[src]:
                r[dst] += q * r[src]
        for r in v:
            if r[src]:
                r[dst] += q * r[src]

    for t in range(min(nr, nc)):
        while True:
            best = None
            for i in range(t, nr):
                ai = a[i]
                for j in range(t, nc):
                    x = ai[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]

            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue

            # Row and column are clear; enforce p | every remaining entry.
            bad = None
            for i in range(t + 1, nr):
                ai = a[i]
                for j in range(t + 1, nc):
                    if ai[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SnfDecomposition(
        U=IntMatrix.from_rows(u, nr),
        S=IntMatrix.from_rows(a, nc),
        V=IntMatrix.from_rows(v, nc),
    )


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form: returns ``(H, U)`` with ``M @ U == H``.

    ``H`` is in column echelon form: pivot rows strictly increase with the
    column index, pivots are positive, and entries to the left of each pivot
    lie in ``[0, pivot)``.  Zero columns are collected at the right.
    """
    nr, nc = m.rows, m.cols
    # Work on columns; cols[j] is column j of H, ucols[j] column j of U.
    cols = m.columns()
    ucols = [[1 if i == j else 0 for i in range(nc)] for j in range(nc)]

    def combine(c, j, x, y, s, t):
        # (col_c, col_j) <- (x col_c + y col_j, s col_c + t col_j)
        for vecs in (cols, ucols):
            vc, vj = vecs[c], vecs[j]
            vecs[c] = [x * p + y * q for p, q in zip(vc, vj)]
            vecs[j] = [s * p + t * q for p, q in zip(vc, vj)]

    def add_col(dst, src, q):
        for vecs in (cols, ucols):
            vd, vs = vecs[dst], vecs[src]
            vecs[dst] = [d + q * s for d, s in zip(vd, vs)]

    c = 0
    for i in range(nr):
        if c >= nc:
            break
        for j in range(c + 1, nc):
            b = cols[j][i]
            if not b:
                continue
            a = cols[c][i]
            if a and b % a == 0:
                add_col(j, c, -(b // a))
                continue
            g, x, y = xgcd(a, b)
            combine(c, j, x, y, -b // g, a // g)
        p = cols[c][i]
        if not p:
            continue
        if p < 0:
            cols[c] = [-z for z in cols[c]]
            ucols[c] = [-z for z in ucols[c]]
            p = -p
        for j in range(c):
            q = cols[j][i] // p
            if q:
                add_col(j, c, -q)
        c += 1

    return IntMatrix.from_columns(cols, nr), IntMatrix.from_columns(ucols, nc)


def hnf_pivots(h: IntMatrix) -> list[tuple[int, int]]:
    """``(row, column)`` positions of the pivots of a column Hermite form."""
    out = []
    row = 0
    for j in range(h.cols):
        while row < h.rows and h[row, j] == 0:
            row += 1
        if row >= h.rows:
            break
        out.append((row, j))
        row += 1
    return out


def column_lattice_basis(m: IntMatrix) -> IntMatrix:
    """Canonical basis (the nonzero Hermite columns) of the lattice spanned by the columns."""
    h, _ = hermite_normal_form(m)
    rank = len(hnf_pivots(h))
    return IntMatrix.from_columns(h.columns()[:rank], h.rows)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai, ak = a[i], a[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * ak[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def lattice_solver(m: IntMatrix) -> Callable[[Sequence[int]], Optional[list[int]]]:
    """Precompute the Hermite form of ``m`` and return a membership solver.

    The solver maps ``b`` to an integer ``x`` with ``M @ x == b``, or ``None``.
    """
    h, u = hermite_normal_form(m)
    pivots = hnf_pivots(h)
    pivot_cols = [(i, h.column(j)) for i, j in pivots]
    pivot_index = [j for _, j in pivots]
    nrows = m.rows

    def solve(b: Sequence[int]) -> Optional[list[int]]:
        if len(b) != nrows:
            raise ValueError(f"vector length {len(b)} does not match {nrows} rows")
        residual = list(b)
        y = [0] * m.cols
        start = 0
        for (row, col), j in zip(pivot_cols, pivot_index):
            if any(residual[start:row]):
                return None
            q, r = divmod(residual[row], col[row])
            if r:
                return None
            if q:
                y[j] = q
                residual = [x - q * c for x, c in zip(residual, col)]
            start = row + 1
        if any(residual):
            return None
        return u.apply(y)

    return solve


def lattice_contains(m: IntMatrix, b: Sequence[int]) -> Optional[list[int]]:
    """Integer ``x`` with ``M @ x == b``, or ``None`` if ``b`` is outside the column lattice."""
    if len(b) != m.rows:
        raise ValueError(f"vector length {len(b)} does not match {m.rows} rows")
    return lattice_solver(m)(b)


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """Basis (as columns) of the integer null space ``{x : M @ x == 0}``."""
    h, u = hermite_normal_form(m)
    rank = len(hnf_pivots(h))
    return IntMatrix.from_columns(u.columns()[rank:], m.cols)


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix (raises if ``m`` is not unimodular)."""
    h, u = hermite_normal_form(m)
    if h != IntMatrix.identity(m.rows) or m.rows != m.cols:
        raise ValueError("matrix is not unimodular")
    return u
