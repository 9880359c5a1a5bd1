"""Immutable dense matrices over a :class:`~nilprod.exactlin.rings.Ring`."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rings import ZZ, Ring


@dataclass(frozen=True)
class Matrix:
    ring: Ring
    nrows: int
    ncols: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ValueError("entry count must equal nrows * ncols")

    # -- construction -------------------------------------------------
    @classmethod
    def from_rows(cls, ring: Ring, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        data = tuple(tuple(ring.convert(x) for x in r) for r in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(data[0])
        return cls(ring, len(data), ncols, data)

    @classmethod
    def from_cols(cls, ring: Ring, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [list(c) for c in cols]
        for c in cols:
            if len(c) != nrows:
                raise ValueError("column length mismatch")
        data = tuple(tuple(ring.convert(c[i]) for c in cols) for i in range(nrows))
        return cls(ring, nrows, len(cols), data)

    @classmethod
    def zeros(cls, ring: Ring, nrows: int, ncols: int) -> "Matrix":
        z = ring.zero
        return cls(ring, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        z, o = ring.zero, ring.one
        return cls(ring, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, ring: Ring, entries: Sequence, nrows: int | None = None, ncols: int | None = None) -> "Matrix":
        nrows = len(entries) if nrows is None else nrows
        ncols = len(entries) if ncols is None else ncols
        z = ring.zero
        data = [[z] * ncols for _ in range(nrows)]
        for i, e in enumerate(entries):
            data[i][i] = ring.convert(e)
        return cls(ring, nrows, ncols, tuple(tuple(r) for r in data))

    # -- access -------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> list:
        return list(self.rows[i])

    def col(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def cols(self) -> list[list]:
        return [self.col(j) for j in range(self.ncols)]

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def to_json(self) -> list[list]:
        return [[self.ring.to_json(x) for x in r] for r in self.rows]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.ring, self.ncols, self.nrows,
                      tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols)))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def select(self, row_idx: Sequence[int] | None = None, col_idx: Sequence[int] | None = None) -> "Matrix":
        ri = range(self.nrows) if row_idx is None else row_idx
        ci = range(self.ncols) if col_idx is None else col_idx
        return Matrix(self.ring, len(ri), len(ci), tuple(tuple(self.rows[i][j] for j in ci) for i in ri))

    # -- arithmetic ---------------------------------------------------
    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = self.ring.zero
        ocols = [other.col(j) for j in range(other.ncols)]
        out = []
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if x != 0]
            row = []
            for c in ocols:
                s = z
                for k, x in nz:
                    y = c[k]
                    if y != 0:
                        s = s + x * y
                row.append(s)
            out.append(tuple(row))
        return Matrix(self.ring, self.nrows, other.ncols, tuple(out))

    def apply(self, vec: Sequence) -> list:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        z = self.ring.zero
        out = []
        for r in self.rows:
            s = z
            for x, y in zip(r, vec):
                if x != 0 and y != 0:
                    s = s + x * y
            out.append(s)
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.ring, self.nrows, self.ncols,
                      tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.ring, self.nrows, self.ncols, tuple(tuple(-a for a in r) for r in self.rows))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.ring.convert(c)
        return Matrix(self.ring, self.nrows, self.ncols, tuple(tuple(c * a for a in r) for r in self.rows))

    def hstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        if any(m.nrows != self.nrows for m in mats):
            raise ValueError("hstack row mismatch")
        rows = tuple(tuple(x for m in mats for x in m.rows[i]) for i in range(self.nrows))
        return Matrix(self.ring, self.nrows, sum(m.ncols for m in mats), rows)

    def vstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        if any(m.ncols != self.ncols for m in mats):
            raise ValueError("vstack column mismatch")
        return Matrix(self.ring, sum(m.nrows for m in mats), self.ncols,
                      tuple(r for m in mats for r in m.rows))

    def kron(self, other: "Matrix") -> "Matrix":
        rows = []
        for r1 in self.rows:
            for r2 in other.rows:
                rows.append(tuple(a * b for a in r1 for b in r2))
        return Matrix(self.ring, self.nrows * other.nrows, self.ncols * other.ncols, tuple(rows))

    def convert(self, ring: Ring) -> "Matrix":
        return Matrix.from_rows(ring, self.rows, self.ncols)


def block_diag(ring: Ring, *blocks: Matrix) -> Matrix:
    nr = sum(b.nrows for b in blocks)
    nc = sum(b.ncols for b in blocks)
    z = ring.zero
    data = [[z] * nc for _ in range(nr)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                data[r0 + i][c0 + j] = b.rows[i][j]
        r0 += b.nrows
        c0 += b.ncols
    return Matrix(ring, nr, nc, tuple(tuple(r) for r in data))


def block(ring: Ring, grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix; every block in a row shares nrows."""
    rows = [grid_row[0].hstack(*grid_row[1:]) for grid_row in grid]
    return rows[0].vstack(*rows[1:])


def int_matrix(rows: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Shorthand for an integer matrix."""
    return Matrix.from_rows(ZZ, rows, ncols)
