"""Finitely generated modules over ZZ or a field, in cyclic form.

A :class:`Module` is ``R/(o_1) + ... + R/(o_n)``: generator i has order
``o_i`` (0 for a free generator; 1 is allowed and means the generator is
zero, which keeps index arithmetic of tensor products regular).  Over a
field every order is 0.  Elements are coordinate vectors, homomorphisms
are matrices acting on columns, and submodules are given by generating
columns.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from ..errors import DomainMismatch
from . import linalg
from .matrix import Matrix
from .rings import QQ, ZZ, Ring
from .snf import nullspace, smith_normal_form, solve


@dataclass(frozen=True)
class Module:
    ring: Ring
    orders: tuple

    def __post_init__(self):
        if self.ring.is_field and any(o != 0 for o in self.orders):
            raise ValueError("modules over a field are free in this engine")
        if any(o < 0 for o in self.orders):
            raise ValueError("orders must be nonnegative")

    @classmethod
    def free(cls, ring: Ring, n: int) -> "Module":
        return cls(ring, (0,) * n)

    @classmethod
    def cyclic(cls, orders: Sequence[int]) -> "Module":
        return cls(ZZ, tuple(int(o) for o in orders))

    @property
    def n(self) -> int:
        return len(self.orders)

    def zero_vector(self) -> list:
        return [self.ring.zero] * self.n

    def basis_vector(self, i: int) -> list:
        v = self.zero_vector()
        v[i] = self.ring.one
        return self.reduce(v)

    def reduce(self, v: Sequence) -> list:
        if self.ring.is_field:
            return [self.ring.convert(x) for x in v]
        return [x % o if o else x for x, o in zip(v, self.orders)]

    def is_zero(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def equal(self, u: Sequence, v: Sequence) -> bool:
        return self.is_zero([a - b for a, b in zip(u, v)])

    def torsion_lattice(self) -> list[list]:
        """Columns o_i e_i spanning the relations (ZZ only)."""
        cols = []
        for i, o in enumerate(self.orders):
            if o:
                c = [0] * self.n
                c[i] = o
                cols.append(c)
        return cols

    def invariants(self):
        """Isomorphism invariant: FgAbGroup over ZZ, dimension over a field."""
        if self.ring.is_field:
            return self.n
        from .fgab import FgAbGroup

        return FgAbGroup.from_orders(self.orders)

    def is_trivial(self) -> bool:
        if self.ring.is_field:
            return self.n == 0
        return all(o == 1 for o in self.orders)

    def describe(self):
        inv = self.invariants()
        if self.ring.is_field:
            return {"ring": self.ring.name, "dim": inv}
        return {"ring": "Z", "invariant_factors": list(inv.invariant_factors)}

    def isomorphic(self, other: "Module") -> bool:
        return self.ring == other.ring and self.invariants() == other.invariants()

    def __str__(self):
        if self.ring.is_field:
            return f"{self.ring.name}^{self.n}"
        return str(self.invariants())


# -- constructions ----------------------------------------------------

def direct_sum(*mods: Module) -> Module:
    ring = mods[0].ring
    if any(m.ring != ring for m in mods):
        raise DomainMismatch("direct sum of modules over different rings")
    return Module(ring, tuple(o for m in mods for o in m.orders))


def tensor(M: Module, N: Module) -> Module:
    """M (x) N with generator (i, j) at index i * N.n + j."""
    if M.ring != N.ring:
        raise DomainMismatch("tensor of modules over different rings")
    return Module(M.ring, tuple(gcd(a, b) for a in M.orders for b in N.orders))


def injection(mods: Sequence[Module], k: int) -> Matrix:
    ring = mods[0].ring
    total = sum(m.n for m in mods)
    off = sum(m.n for m in mods[:k])
    rows = [[ring.zero] * mods[k].n for _ in range(total)]
    for i in range(mods[k].n):
        rows[off + i][i] = ring.one
    return Matrix.from_rows(ring, rows, mods[k].n)


def projection(mods: Sequence[Module], k: int) -> Matrix:
    return injection(mods, k).T


def identity(M: Module) -> Matrix:
    return Matrix.identity(M.ring, M.n)


def zero_map(M: Module, N: Module) -> Matrix:
    return Matrix.zeros(M.ring, N.n, M.n)


def twist(M: Module, N: Module) -> Matrix:
    """The swap M (x) N -> N (x) M, m (x) n |-> n (x) m."""
    R = M.ring
    rows = [[R.zero] * (M.n * N.n) for _ in range(N.n * M.n)]
    for i in range(M.n):
        for j in range(N.n):
            rows[j * M.n + i][i * N.n + j] = R.one
    return Matrix.from_rows(R, rows, M.n * N.n)


# -- homomorphisms -----------------------------------------------------

def check_hom(f: Matrix, M: Module, N: Module) -> None:
    """Raise DomainMismatch unless f is a well-defined map M -> N."""
    if f.shape != (N.n, M.n):
        raise DomainMismatch(f"matrix shape {f.shape} does not match {N.n}x{M.n}")
    if M.ring.is_field:
        return
    for j, o in enumerate(M.orders):
        if o == 0:
            continue
        img = [o * f[i, j] for i in range(N.n)]
        if not N.is_zero(img):
            raise DomainMismatch(f"generator {j} has order {o} but its image does not")


def is_hom(f: Matrix, M: Module, N: Module) -> bool:
    try:
        check_hom(f, M, N)
    except DomainMismatch:
        return False
    return True


def maps_equal(f: Matrix, g: Matrix, N: Module) -> bool:
    """Equality of two maps into N (compared modulo N's relations)."""
    return all(N.equal(f.col(j), g.col(j)) for j in range(f.ncols))


def is_zero_map(f: Matrix, N: Module) -> bool:
    return all(N.is_zero(f.col(j)) for j in range(f.ncols))


# -- submodules --------------------------------------------------------

def _lattice(M: Module, gens: Matrix) -> Matrix:
    cols = gens.cols() + M.torsion_lattice()
    if not cols:
        return Matrix.zeros(M.ring, M.n, 0)
    return Matrix.from_cols(M.ring, cols, M.n)


def contains(M: Module, gens: Matrix, v: Sequence) -> bool:
    """Is v in the submodule generated by the columns of gens?"""
    if M.ring.is_field:
        return linalg.Subspace.span(M.ring, M.n, gens.cols()).contains(v)
    L = _lattice(M, gens)
    if L.ncols == 0:
        return all(x == 0 for x in v)
    return solve(L, v) is not None


def sub_le(M: Module, G1: Matrix, G2: Matrix) -> bool:
    if M.ring.is_field:
        S2 = linalg.Subspace.span(M.ring, M.n, G2.cols())
        return all(S2.contains(c) for c in G1.cols())
    return all(contains(M, G2, c) for c in G1.cols())


def sub_eq(M: Module, G1: Matrix, G2: Matrix) -> bool:
    return sub_le(M, G1, G2) and sub_le(M, G2, G1)


def span_all(M: Module) -> Matrix:
    return identity(M)


@dataclass(frozen=True)
class Quotient:
    """M/S as a cyclic-form module Q with projection M -> Q and a set-theoretic section."""

    module: Module
    proj: Matrix
    section: Matrix


def quotient(M: Module, gens: Matrix) -> Quotient:
    R = M.ring
    if gens.nrows != M.n:
        raise DomainMismatch("generators do not live in the module")
    if R.is_field:
        W = linalg.Subspace.span(R, M.n, gens.cols())
        cidx = W.complement_indices()
        proj_cols = []
        for j in range(M.n):
            r = W.reduce(M.basis_vector(j))
            proj_cols.append([r[c] for c in cidx])
        proj = Matrix.from_cols(R, proj_cols, len(cidx)) if M.n else Matrix.zeros(R, len(cidx), 0)
        sec_cols = [M.basis_vector(c) for c in cidx]
        section = Matrix.from_cols(R, sec_cols, M.n) if cidx else Matrix.zeros(R, M.n, 0)
        return Quotient(Module.free(R, len(cidx)), proj, section)
    rel_rows = gens.cols() + M.torsion_lattice()
    if not rel_rows:
        return Quotient(M, identity(M), identity(M))
    Rel = Matrix.from_rows(ZZ, rel_rows, M.n)
    snf = smith_normal_form(Rel)
    orders = []
    keep = []
    for k in range(M.n):
        o = abs(snf.D[k, k]) if k < snf.rank else 0
        if o != 1:
            keep.append(k)
            orders.append(o)
    Q = Module(ZZ, tuple(orders))
    VT = snf.V.T
    proj_rows = [[x % o if o else x for x in VT.row(k)] for k, o in zip(keep, orders)]
    proj = Matrix.from_rows(ZZ, proj_rows, M.n) if keep else Matrix.zeros(ZZ, 0, M.n)
    Vinv = unimodular_inverse(snf.V)
    section = Matrix.from_cols(ZZ, [M.reduce(Vinv.row(k)) for k in keep], M.n) if keep \
        else Matrix.zeros(ZZ, M.n, 0)
    return Quotient(Q, proj, section)


def unimodular_inverse(V: Matrix) -> Matrix:
    inv = linalg.inverse(V.convert(QQ))
    rows = []
    for r in inv.rows:
        row = []
        for x in r:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(x.numerator)
        rows.append(row)
    return Matrix.from_rows(ZZ, rows, V.ncols)


def kernel(f: Matrix, M: Module, N: Module) -> Matrix:
    """Generators (columns) of ker(f: M -> N) as a submodule of M."""
    check_hom(f, M, N)
    R = M.ring
    if R.is_field:
        return linalg.field_kernel(f)
    tors = N.torsion_lattice()
    A = f.hstack(Matrix.from_cols(ZZ, tors, N.n)) if tors else f
    if A.ncols == 0:
        return Matrix.zeros(ZZ, M.n, 0)
    K = nullspace(A)
    top = K.select(list(range(M.n)), None)
    cols = [M.reduce(c) for c in top.cols()]
    cols = [c for c in cols if any(x != 0 for x in c)]
    return Matrix.from_cols(ZZ, cols, M.n) if cols else Matrix.zeros(ZZ, M.n, 0)


def image_gens(f: Matrix, N: Module) -> Matrix:
    cols = [N.reduce(c) for c in f.cols()]
    cols = [c for c in cols if any(x != 0 for x in c)]
    return Matrix.from_cols(N.ring, cols, N.n) if cols else Matrix.zeros(N.ring, N.n, 0)


def is_injective(f: Matrix, M: Module, N: Module) -> bool:
    K = kernel(f, M, N)
    return all(M.is_zero(c) for c in K.cols())


def is_surjective(f: Matrix, M: Module, N: Module) -> bool:
    check_hom(f, M, N)
    return sub_le(N, identity(N), f)


def submodule_type(M: Module, gens: Matrix) -> Module:
    """The abstract module generated by the columns of gens, in cyclic form."""
    F = Module.free(M.ring, gens.ncols)
    K = kernel(gens, F, M) if gens.ncols else Matrix.zeros(M.ring, 0, 0)
    return quotient(F, K).module


def exact_at(f: Matrix, g: Matrix, M: Module, N: Module, P: Module) -> bool:
    """Is M --f--> N --g--> P exact at N?"""
    return sub_eq(N, image_gens(f, N), kernel(g, N, P))


def apply(f: Matrix, v: Sequence, N: Module) -> list:
    return N.reduce(f.apply(list(v)))
