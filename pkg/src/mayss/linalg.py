"""Dense exact linear algebra over F_p: rank, kernel, membership.

Matrices are small (bases at a single tridegree), so plain Gauss-Jordan with
modular inverses is the whole story.  Operations never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError


@dataclass(frozen=True)
class MatrixFp:
    modulus: int
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major, residues in [0, modulus)

    def row(self, r: int) -> tuple[int, ...]:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(r)) for r in range(self.rows)]


def matrix_from_rows(rows: Sequence[Sequence[int]], p: int, cols: int | None = None) -> MatrixFp:
    if p < 2:
        raise ParameterError("modulus must be at least 2, got %d" % p)
    nrows = len(rows)
    if cols is None:
        if nrows == 0:
            raise ParameterError("cannot infer column count of an empty matrix")
        cols = len(rows[0])
    flat = []
    for r in rows:
        if len(r) != cols:
            raise ParameterError("ragged rows: expected %d columns, got %d" % (cols, len(r)))
        flat.extend(v % p for v in r)
    return MatrixFp(modulus=p, rows=nrows, cols=cols, entries=tuple(flat))


def transpose(m: MatrixFp) -> MatrixFp:
    rows = [[m.entries[r * m.cols + c] for r in range(m.rows)] for c in range(m.cols)]
    return MatrixFp(modulus=m.modulus, rows=m.cols, cols=m.rows,
                    entries=tuple(v for row in rows for v in row))


def mat_vec(m: MatrixFp, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != m.cols:
        raise ParameterError("vector length %d does not match %d columns" % (len(v), m.cols))
    p = m.modulus
    out = []
    for r in range(m.rows):
        row = m.row(r)
        out.append(sum(row[c] * v[c] for c in range(m.cols)) % p)
    return tuple(out)


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form in place on a copy; returns (rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((rr for rr in range(r, nrows) if rows[rr][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for rr in range(nrows):
            if rr != r and rows[rr][c]:
                f = rows[rr][c]
                rows[rr] = [(rows[rr][k] - f * rows[r][k]) % p for k in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m: MatrixFp) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _rref(m.to_rows(), m.modulus)
    return len(pivots)


def kernel_basis(m: MatrixFp) -> list[tuple[int, ...]]:
    """Basis vectors of the null space, one per free column."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(1 if c == f else 0 for c in range(m.cols)) for f in range(m.cols)]
    p = m.modulus
    rref, pivots = _rref(m.to_rows(), p)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [0] * m.cols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rref[r][free]) % p
        basis.append(tuple(v))
    return basis


def in_span(m: MatrixFp, v: Sequence[int]) -> tuple[int, ...] | None:
    """Solve m @ c = v; returns one coefficient vector, or None if unsolvable."""
    if len(v) != m.rows:
        raise ParameterError("vector length %d does not match %d rows" % (len(v), m.rows))
    p = m.modulus
    if m.cols == 0:
        return () if all(x % p == 0 for x in v) else None
    aug = [list(m.row(r)) + [v[r] % p] for r in range(m.rows)]
    if not aug:
        return (0,) * m.cols
    rref, pivots = _rref(aug, p)
    if m.cols in pivots:
        return None
    sol = [0] * m.cols
    for r, pc in enumerate(pivots):
        sol[pc] = rref[r][m.cols]
    return tuple(sol)
