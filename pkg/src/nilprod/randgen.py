"""Seeded random instances for the property suites."""
from __future__ import annotations

import random
from typing import Sequence

from .exactlin import GF, QQ, ZZ, Matrix, Ring, Subspace
from .exactlin import modules as mod
from .exactlin.linalg import rank, rref
from .exactlin.modules import Module
from . import operad2
from .homology import ce_d3
from .exactlin import field_kernel
from .nonassoc import SCAlgebra, center, check_identity
from .nonassoc.reps import LieRep, adjoint_rep, sl2, sl2_standard_rep, trivial_rep, validated

SMALL = (-3, -2, -1, 0, 0, 1, 1, 2, 3)
ORDERS = (0, 0, 0, 2, 3, 4, 6, 1)


def rand_elem(rng: random.Random, F: Ring):
    return F.convert(rng.choice(SMALL))


def random_vector(rng, F, n):
    return [rand_elem(rng, F) for _ in range(n)]


def random_invertible(rng: random.Random, F: Ring, n: int) -> Matrix:
    while True:
        M = Matrix.from_rows(F, [random_vector(rng, F, n) for _ in range(n)], n)
        if rank(M) == n:
            return M


# -- modules and maps ----------------------------------------------------------

def random_module(rng: random.Random, R: Ring, max_gens: int = 3, min_gens: int = 0) -> Module:
    n = rng.randint(min_gens, max_gens)
    if R.is_field:
        return Module.free(R, n)
    return Module(ZZ, tuple(rng.choice(ORDERS) for _ in range(n)))


def random_hom(rng: random.Random, M: Module, N: Module) -> Matrix:
    """A random homomorphism M -> N between cyclic-form modules."""
    R = M.ring
    rows = []
    for i in range(N.n):
        row = []
        for j in range(M.n):
            x = rng.choice(SMALL)
            if not R.is_field:
                o, t = M.orders[j], N.orders[i]
                if o:
                    if t == 0:
                        x = 0
                    else:
                        step = t // _gcd(t, o)
                        x = x * step
            row.append(x)
        rows.append(row)
    f = Matrix.from_rows(R, rows, M.n)
    mod.check_hom(f, M, N)
    return f


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def random_submodule(rng: random.Random, M: Module, max_gens: int = 2) -> Matrix:
    k = rng.randint(0, max_gens)
    cols = [M.reduce([rng.choice(SMALL) for _ in range(M.n)]) for _ in range(k)]
    return Matrix.from_cols(M.ring, cols, M.n) if cols else Matrix.zeros(M.ring, M.n, 0)


# -- operads and class-two algebras ---------------------------------------------

def random_nil2_algebra(rng: random.Random, op: operad2.Nil2Operad, max_gens: int = 2) -> operad2.Nil2Algebra:
    """Either abelian or a quotient of the free class-two algebra on a random module."""
    V = random_module(rng, op.ring, max_gens)
    if rng.random() < 0.3:
        return operad2.abelian_algebra(op, V)
    T = mod.tensor(mod.tensor(V, V), op.P2)
    rel = random_submodule(rng, T, 2) if T.n else None
    return operad2.free_nil2_algebra(op, V, rel)


# -- Lie, Leibniz and associative algebras -----------------------------------------

def random_nilpotent_lie(rng: random.Random, F: Ring, max_dim: int = 6, basis_change: bool = True) -> SCAlgebra:
    """Iterated central extensions of an abelian algebra by random 2-cocycles."""
    target = rng.randint(1, max_dim)
    start = rng.randint(1, min(3, target))
    g = SCAlgebra.abelian(F, start, "Lie")
    while g.dim < target:
        g = random_central_extension_of(rng, g)
    if basis_change:
        g = g.change_basis(random_invertible(rng, F, g.dim))
    return g


def random_central_extension_of(rng: random.Random, g: SCAlgebra) -> SCAlgebra:
    """g + F z with [x, y]' = [x, y] + w(x, y) z for a random cocycle w."""
    F, n = g.field, g.dim
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        d3 = ce_d3(g)
        Z = field_kernel(d3.T) if d3.ncols else Matrix.identity(F, len(pairs))
        w = [F.zero] * len(pairs)
        for c in Z.cols():
            a = rand_elem(rng, F)
            w = [x + a * y for x, y in zip(w, c)]
    else:
        w = []
    prods = {}
    for i in range(n):
        for j in range(n):
            v = list(g.table[i][j]) + [F.zero]
            prods[(i, j)] = v
    for (i, j), c in zip(pairs, w):
        prods[(i, j)][n] = prods[(i, j)][n] + c
        prods[(j, i)][n] = prods[(j, i)][n] - c
    return SCAlgebra.from_products(F, n + 1, prods, "Lie", mirror=False)


def random_central_extension(rng: random.Random, F: Ring = QQ, max_dim: int = 6):
    """(B, K) with B nilpotent Lie and K a random subspace of its center."""
    B = random_nilpotent_lie(rng, F, max_dim)
    Z = center(B)
    k = rng.randint(0, Z.dim)
    vecs = []
    for _ in range(k):
        coeffs = random_vector(rng, F, Z.dim)
        v = [F.zero] * B.dim
        for c, b in zip(coeffs, Z.basis):
            v = [x + c * y for x, y in zip(v, b)]
        vecs.append(v)
    return B, B.span(vecs)


def _solvable2(F):
    return SCAlgebra.from_products(F, 2, {(0, 1): [0, 1]}, "Lie")


def random_lie(rng: random.Random, F: Ring, max_dim: int = 5) -> SCAlgebra:
    kind = rng.choice(["nilpotent", "nilpotent", "sl2", "solvable", "sum"])
    if kind == "sl2" and F.characteristic != 2 and max_dim >= 3:
        g = sl2(F)
    elif kind == "solvable":
        n = rng.randint(2, max_dim)
        # [e0, e_i] = a_i e_i + b_i e_(i+1): a triangular derivation
        prods = {}
        for i in range(1, n):
            v = [F.zero] * n
            v[i] = rand_elem(rng, F)
            if i + 1 < n:
                v[i + 1] = rand_elem(rng, F)
            prods[(0, i)] = v
        g = SCAlgebra.from_products(F, n, prods, "Lie")
    elif kind == "sum" and max_dim >= 3:
        a = _solvable2(F)
        b = random_nilpotent_lie(rng, F, max_dim - 2, basis_change=False)
        g = direct_sum_sc(a, b)
    else:
        g = random_nilpotent_lie(rng, F, max_dim, basis_change=False)
    return g.change_basis(random_invertible(rng, F, g.dim))


def direct_sum_sc(a: SCAlgebra, b: SCAlgebra) -> SCAlgebra:
    F, n = a.field, a.dim + b.dim
    prods = {}
    for i in range(a.dim):
        for j in range(a.dim):
            prods[(i, j)] = list(a.table[i][j]) + [F.zero] * b.dim
    for i in range(b.dim):
        for j in range(b.dim):
            prods[(a.dim + i, a.dim + j)] = [F.zero] * a.dim + list(b.table[i][j])
    return SCAlgebra.from_products(F, n, prods, a.variety, mirror=False)


def random_lie_rep(rng: random.Random, F: Ring) -> LieRep:
    """Small representations of small Lie algebras, conjugated by a random basis change."""
    kind = rng.choice(["abelian", "sl2", "sl2adj", "solvable", "heisenberg", "trivial"])
    if kind == "abelian":
        a, m = rng.randint(1, 2), rng.randint(1, 3)
        g = SCAlgebra.abelian(F, a, "Lie")
        N = Matrix.from_rows(F, [random_vector(rng, F, m) for _ in range(m)], m)
        mats = []
        for _ in range(a):
            c0, c1, c2 = (rand_elem(rng, F) for _ in range(3))
            mats.append(Matrix.identity(F, m).scale(c0) + N.scale(c1) + (N @ N).scale(c2))
        rep = LieRep(g, m, tuple(mats))
    elif kind == "sl2":
        rep = sl2_standard_rep(F)
    elif kind == "sl2adj":
        rep = adjoint_rep(sl2(F))
    elif kind == "solvable":
        rep = adjoint_rep(_solvable2(F))
    elif kind == "heisenberg":
        g = SCAlgebra.from_products(F, 3, {(0, 1): [0, 0, 1]}, "Lie")
        E = lambda i, j: Matrix.from_rows(F, [[1 if (r, c) == (i, j) else 0 for c in range(3)] for r in range(3)])
        rep = LieRep(g, 3, (E(0, 1), E(1, 2), E(0, 2)))
    else:
        g = random_nilpotent_lie(rng, F, 3)
        rep = trivial_rep(g, rng.randint(1, 2))
    P = random_invertible(rng, F, rep.dim)
    from .exactlin.linalg import inverse

    Pi = inverse(P)
    return validated(LieRep(rep.algebra, rep.dim, tuple(Pi @ m @ P for m in rep.rho)))


def random_leibniz(rng: random.Random, F: Ring, max_dim: int = 5) -> SCAlgebra:
    """g + M with (x, m)(y, n) = ([x, y], -rho(y) m): a Leibniz algebra that is rarely Lie."""
    while True:
        rep = random_lie_rep(rng, F)
        g, m = rep.algebra, rep.dim
        if g.dim + m <= max_dim:
            break
    n = g.dim + m
    prods = {}
    for i in range(g.dim):
        for j in range(g.dim):
            prods[(i, j)] = list(g.table[i][j]) + [F.zero] * m
    for k in range(m):
        for j in range(g.dim):
            col = rep.rho[j].col(k)
            prods[(g.dim + k, j)] = [F.zero] * g.dim + [-x for x in col]
    L = SCAlgebra.from_products(F, n, prods, "Leib", mirror=False)
    if rng.random() < 0.5:
        L = L.change_basis(random_invertible(rng, F, n))
    return L


def _matrix_span(F, mats: Sequence[Matrix], size: int) -> list[list]:
    vecs = [[x for r in M.rows for x in r] for M in mats]
    R, _ = rref(vecs, F, size * size)
    return R


def random_assoc(rng: random.Random, F: Ring, max_dim: int = 5) -> SCAlgebra:
    """Subalgebra of (strictly) upper triangular matrices generated by one or two random elements."""
    while True:
        size = rng.choice([3, 3, 4])
        strict = size == 4
        gens = []
        for _ in range(rng.randint(1, 2)):
            rows = [[rand_elem(rng, F) if (c > r or (c == r and not strict)) else F.zero
                     for c in range(size)] for r in range(size)]
            gens.append(Matrix.from_rows(F, rows, size))
        basis = _matrix_span(F, gens, size)
        while True:
            mats = [Matrix.from_rows(F, [b[r * size:(r + 1) * size] for r in range(size)], size) for b in basis]
            prods = [a @ b for a in mats for b in mats]
            nb = _matrix_span(F, mats + prods, size)
            if len(nb) == len(basis):
                break
            basis = nb
        if 1 <= len(basis) <= max_dim:
            break
    mats = [Matrix.from_rows(F, [b[r * size:(r + 1) * size] for r in range(size)], size) for b in basis]
    S = Subspace.span(F, size * size, basis)
    table = {}
    for i, a in enumerate(mats):
        for j, b in enumerate(mats):
            v = [x for r in (a @ b).rows for x in r]
            table[(i, j)] = S.coords(v)
    A = SCAlgebra.from_products(F, len(mats), table, "Assoc", mirror=False)
    return A


def random_tagged_algebra(rng: random.Random, F: Ring, variety: str, max_dim: int = 5) -> SCAlgebra:
    if variety == "Lie":
        A = random_lie(rng, F, max_dim)
    elif variety == "Leib":
        A = random_leibniz(rng, F, max_dim)
    elif variety == "Assoc":
        A = random_assoc(rng, F, max_dim)
    else:
        raise ValueError(variety)
    rep = check_identity(A)
    if not rep.valid:
        raise AssertionError(f"random generator produced an invalid {variety} algebra: {rep.failures[0]}")
    return A


def random_field(rng: random.Random):
    return rng.choice([QQ, GF(5)])
