"""Exact linear algebra over a field (QQ or GF(p)).

Vectors are plain lists of field elements.  :class:`Subspace` keeps its
basis in reduced row echelon form, which makes it canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import NotSubspace
from .matrix import Matrix
from .rings import Ring


def rref(rows: Iterable[Sequence], F: Ring, ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; zero rows dropped.  Returns (rows, pivots)."""
    A = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(A)):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        pr = A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(M: Matrix) -> int:
    return len(rref(M.rows, M.ring, M.ncols)[1])


def field_kernel(M: Matrix) -> Matrix:
    """Columns form a basis of ker(M)."""
    F = M.ring
    R, piv = rref(M.rows, F, M.ncols)
    free = [j for j in range(M.ncols) if j not in set(piv)]
    cols = []
    for f in free:
        v = [F.zero] * M.ncols
        v[f] = F.one
        for row, p in zip(R, piv):
            v[p] = -row[f]
        cols.append(v)
    return Matrix.from_cols(F, cols, M.ncols)


def inverse(M: Matrix) -> Matrix:
    F = M.ring
    n = M.nrows
    if n != M.ncols:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(M.rows[i]) + [F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    R, piv = rref(aug, F, 2 * n)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix.from_rows(F, [r[n:] for r in R[:n]], n)


def solve_field(M: Matrix, b: Sequence) -> list | None:
    F = M.ring
    aug = [list(M.rows[i]) + [F.convert(b[i])] for i in range(M.nrows)]
    R, piv = rref(aug, F, M.ncols + 1)
    if piv and piv[-1] == M.ncols:
        return None
    x = [F.zero] * M.ncols
    for row, p in zip(R, piv):
        x[p] = row[M.ncols]
    return x


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of F^n with a canonical (RREF) basis."""

    field: Ring
    n: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, F: Ring, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        R, piv = rref(vectors, F, n)
        return cls(F, n, tuple(tuple(r) for r in R), tuple(piv))

    @classmethod
    def zero(cls, F: Ring, n: int) -> "Subspace":
        return cls(F, n, (), ())

    @classmethod
    def full(cls, F: Ring, n: int) -> "Subspace":
        return cls.span(F, n, Matrix.identity(F, n).rows)

    @classmethod
    def from_matrix_cols(cls, M: Matrix) -> "Subspace":
        return cls.span(M.ring, M.nrows, M.cols())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[list]:
        return [list(b) for b in self.basis]

    def as_matrix(self) -> Matrix:
        """Basis vectors as columns."""
        return Matrix.from_cols(self.field, self.basis, self.n)

    def reduce(self, v: Sequence) -> list:
        """Remainder of v after clearing the pivot coordinates."""
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c != 0:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def coords(self, v: Sequence) -> list:
        """Coordinates of v (assumed inside) w.r.t. the RREF basis."""
        return [v[p] for p in self.pivots]

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self <= other and other <= self

    def __hash__(self):
        return hash((self.n, self.basis))

    def _check(self, other: "Subspace"):
        if self.n != other.n or self.field != other.field:
            raise NotSubspace("subspaces live in different ambient spaces")

    def join(self, *others: "Subspace") -> "Subspace":
        vecs = list(self.basis)
        for o in others:
            self._check(o)
            vecs.extend(o.basis)
        return Subspace.span(self.field, self.n, vecs)

    def meet(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.n)
        F = self.field
        M = self.as_matrix().hstack(-other.as_matrix())
        K = field_kernel(M)
        vecs = []
        for c in K.cols():
            coeff = c[: self.dim]
            v = [F.zero] * self.n
            for a, b in zip(coeff, self.basis):
                if a != 0:
                    v = [x + a * y for x, y in zip(v, b)]
            vecs.append(v)
        return Subspace.span(F, self.n, vecs)

    def image(self, M: Matrix) -> "Subspace":
        return Subspace.span(self.field, M.nrows, [M.apply(b) for b in self.basis])

    def complement_indices(self) -> list[int]:
        ps = set(self.pivots)
        return [j for j in range(self.n) if j not in ps]

    def to_json(self) -> dict:
        return {"dim": self.dim, "basis": [[self.field.to_json(x) for x in b] for b in self.basis]}


class QuotientSpace:
    """V/W for subspaces W <= V, with representatives and coordinates."""

    def __init__(self, V: Subspace, W: Subspace):
        if not W <= V:
            raise NotSubspace("W is not contained in V")
        F = V.field
        self.V, self.W = V, W
        reps = []
        cur = W
        for b in V.basis:
            if not cur.contains(b):
                reps.append(list(b))
                cur = cur.join(Subspace.span(F, V.n, [b]))
        self.reps = reps
        cols = reps + [list(b) for b in W.basis]
        self._coord = _left_inverse(Matrix.from_cols(F, cols, V.n)) if cols else None

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, v: Sequence) -> list:
        """Coordinates of the class of v (v must lie in V)."""
        if not self.V.contains(v):
            raise NotSubspace("vector is not in the numerator space")
        if self._coord is None:
            return []
        return self._coord.apply(list(v))[: self.dim]

    def lift(self, c: Sequence) -> list:
        F = self.V.field
        v = [F.zero] * self.V.n
        for a, r in zip(c, self.reps):
            if a != 0:
                v = [x + a * y for x, y in zip(v, r)]
        return v


def _left_inverse(M: Matrix) -> Matrix:
    """L with L @ M = I for a full-column-rank M."""
    F = M.ring
    _, piv = rref(M.T.rows, F, M.nrows)
    if len(piv) != M.ncols:
        raise ValueError("columns are dependent")
    S = M.select(piv, None)
    Sinv = inverse(S)
    L = [[F.zero] * M.nrows for _ in range(M.ncols)]
    for i in range(M.ncols):
        for k, p in enumerate(piv):
            L[i][p] = Sinv[i, k]
    return Matrix.from_rows(F, L, M.nrows)


def field_quotient(V: Matrix, W: Matrix) -> QuotientSpace:
    """dim(V/W) with coset representatives; V, W given by spanning columns."""
    Vs = Subspace.from_matrix_cols(V)
    Ws = Subspace.from_matrix_cols(W)
    if Vs.join(Ws).dim > Vs.dim:
        raise NotSubspace("W is not contained in V")
    return QuotientSpace(Vs, Ws)
