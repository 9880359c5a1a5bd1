"""Smith normal form with unimodular transforms, and integer solving built on it."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .matrix import Matrix


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with ``D`` diagonal, d_1 | d_2 | ... | d_r, then zeros."""

    U: Matrix
    D: Matrix
    V: Matrix
    rank: int

    @property
    def diagonal(self) -> list:
        return [self.D[i, i] for i in range(min(self.D.shape))]


def smith_normal_form(M: Matrix) -> SnfResult:
    """Smith normal form over a Euclidean ring (ZZ, or a field).

    Pivot choice: smallest nonzero norm, ties broken by lowest row then
    lowest column, so U and V are reproducible.
    """
    R = M.ring
    m, n = M.shape
    zero, one = R.zero, R.one
    A = [list(r) for r in M.rows]
    U = [[one if i == j else zero for j in range(m)] for i in range(m)]
    V = [[one if i == j else zero for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for r in A:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]

    def row_sub(dst, src, q):
        # row_dst -= q * row_src
        if q == 0:
            return
        ad, as_ = A[dst], A[src]
        for k in range(n):
            if as_[k] != 0:
                ad[k] = ad[k] - q * as_[k]
        ud, us = U[dst], U[src]
        for k in range(m):
            if us[k] != 0:
                ud[k] = ud[k] - q * us[k]

    def col_sub(dst, src, q):
        # col_dst -= q * col_src
        if q == 0:
            return
        for r in A:
            if r[src] != 0:
                r[dst] = r[dst] - q * r[src]
        for r in V:
            if r[src] != 0:
                r[dst] = r[dst] - q * r[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0:
                    key = (R.norm(A[i][j]), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q, _ = R.divmod(A[i][t], A[t][t])
                    row_sub(i, t, q)
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q, _ = R.divmod(A[t][j], A[t][t])
                    col_sub(j, t, q)
                    dirty = dirty or A[t][j] != 0
            if dirty:
                cand = None
                for i in range(t + 1, m):
                    if A[i][t] != 0:
                        key = (R.norm(A[i][t]), 0, i)
                        cand = key if cand is None or key < cand else cand
                for j in range(t + 1, n):
                    if A[t][j] != 0:
                        key = (R.norm(A[t][j]), 1, j)
                        cand = key if cand is None or key < cand else cand
                _, kind, idx = cand
                if kind == 0:
                    swap_rows(t, idx)
                else:
                    swap_cols(t, idx)
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] != 0 and R.divmod(A[i][j], A[t][t])[1] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_sub(t, bad, -one)
        u = R.normalize_unit(A[t][t])
        if u != 1:
            A[t] = [u * x for x in A[t]]
            U[t] = [u * x for x in U[t]]
        t += 1

    ring = R
    return SnfResult(
        U=Matrix(ring, m, m, tuple(tuple(r) for r in U)),
        D=Matrix(ring, m, n, tuple(tuple(r) for r in A)),
        V=Matrix(ring, n, n, tuple(tuple(r) for r in V)),
        rank=t,
    )


def solve(M: Matrix, b: Sequence) -> list | None:
    """Some x with ``M x = b`` over M's ring, or None if no solution exists."""
    snf = smith_normal_form(M)
    R = M.ring
    Ub = snf.U.apply([R.convert(x) for x in b])
    y = [R.zero] * M.ncols
    for i in range(M.nrows):
        if i < snf.rank:
            q, r = R.divmod(Ub[i], snf.D[i, i])
            if r != 0:
                return None
            y[i] = q
        elif Ub[i] != 0:
            return None
    return snf.V.apply(y)


def nullspace(M: Matrix) -> Matrix:
    """Columns spanning ``{x : M x = 0}`` (a lattice basis over ZZ)."""
    snf = smith_normal_form(M)
    return snf.V.select(None, list(range(snf.rank, M.ncols)))


def determinant(M: Matrix):
    """Determinant by fraction-free Bareiss elimination."""
    n = M.nrows
    if n != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return M.ring.one
    A = [list(r) for r in M.rows]
    sign = 1
    prev = M.ring.one
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return M.ring.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = M.ring.divmod(num, prev)[0]
        prev = A[k][k]
    return A[n - 1][n - 1] * sign
