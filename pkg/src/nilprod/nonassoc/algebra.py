"""Finite-dimensional algebras over a field given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..errors import InvalidAlgebra, NotSubspace
from ..exactlin import Matrix, Ring, Subspace, field_kernel
from ..exactlin.linalg import inverse

VARIETY_ALIASES = {
    "lie": "Lie", "Lie": "Lie",
    "leib": "Leib", "Leib": "Leib", "leibniz": "Leib",
    "assoc": "Assoc", "Assoc": "Assoc",
    "comm": "Comm", "Comm": "Comm", "commassoc": "Comm", "CommAssoc": "Comm",
    "none": None, "None": None, None: None,
}


def normalize_variety(v) -> str | None:
    try:
        return VARIETY_ALIASES[v]
    except KeyError:
        raise ValueError(f"unknown variety {v!r}") from None


@dataclass(frozen=True, eq=False)
class SCAlgebra:
    """e_i e_j = sum_k table[i][j][k] e_k."""

    field: Ring
    dim: int
    table: tuple
    variety: str | None = None
    name: str = field(default="")

    def __post_init__(self):
        object.__setattr__(self, "variety", normalize_variety(self.variety))
        F = self.field
        tab = tuple(tuple(tuple(F.convert(x) for x in self.table[i][j]) for j in range(self.dim))
                    for i in range(self.dim))
        if len(self.table) != self.dim or any(len(r) != self.dim for r in self.table):
            raise InvalidAlgebra("structure table has the wrong shape")
        if any(len(v) != self.dim for r in tab for v in r):
            raise InvalidAlgebra("structure constant vectors have the wrong length")
        object.__setattr__(self, "table", tab)

    # -- construction ---------------------------------------------------
    @classmethod
    def from_products(cls, F: Ring, dim: int, products: Mapping[tuple[int, int], Sequence],
                      variety=None, mirror: bool = True, name: str = "") -> "SCAlgebra":
        """Unstated products are zero; Lie and Comm fill the mirrored pair when absent."""
        variety = normalize_variety(variety)
        z = [F.zero] * dim
        tab = [[list(z) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in products.items():
            tab[i][j] = [F.convert(x) for x in v]
        if mirror and variety in ("Lie", "Comm"):
            sign = -1 if variety == "Lie" else 1
            for (i, j), v in products.items():
                if (j, i) not in products:
                    tab[j][i] = [sign * F.convert(x) for x in v]
        return cls(F, dim, tuple(tuple(tuple(v) for v in r) for r in tab), variety, name)

    @classmethod
    def abelian(cls, F: Ring, dim: int, variety=None) -> "SCAlgebra":
        return cls.from_products(F, dim, {}, variety)

    @classmethod
    def from_matrix(cls, F: Ring, M: Matrix, variety=None, name: str = "") -> "SCAlgebra":
        """From the dim x dim^2 matrix whose column i*dim + j is e_i e_j."""
        n = M.nrows
        tab = tuple(tuple(tuple(M.col(i * n + j)) for j in range(n)) for i in range(n))
        return cls(F, n, tab, variety, name)

    def with_variety(self, variety) -> "SCAlgebra":
        return SCAlgebra(self.field, self.dim, self.table, variety, self.name)

    # -- arithmetic -----------------------------------------------------
    def basis_vector(self, i: int) -> list:
        F = self.field
        return [F.one if k == i else F.zero for k in range(self.dim)]

    def zero_vector(self) -> list:
        return [self.field.zero] * self.dim

    def mul(self, u: Sequence, v: Sequence) -> list:
        out = self.zero_vector()
        for i, a in enumerate(u):
            if a == 0:
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if b == 0:
                    continue
                c = a * b
                for k, x in enumerate(row[j]):
                    if x != 0:
                        out[k] = out[k] + c * x
        return out

    def structure_matrix(self) -> Matrix:
        n = self.dim
        cols = [list(self.table[i][j]) for i in range(n) for j in range(n)]
        return Matrix.from_cols(self.field, cols, n)

    def left_mult(self, u: Sequence) -> Matrix:
        """v |-> u v."""
        return Matrix.from_cols(self.field, [self.mul(u, self.basis_vector(j)) for j in range(self.dim)], self.dim)

    def right_mult(self, u: Sequence) -> Matrix:
        """v |-> v u."""
        return Matrix.from_cols(self.field, [self.mul(self.basis_vector(j), u) for j in range(self.dim)], self.dim)

    def is_abelian(self) -> bool:
        return all(x == 0 for r in self.table for v in r for x in v)

    def change_basis(self, P: Matrix) -> "SCAlgebra":
        """The same algebra in the basis f_k = sum_i P[i, k] e_i (P invertible)."""
        Pinv = inverse(P)
        n = self.dim
        cols = [P.col(k) for k in range(n)]
        prods = {}
        for a in range(n):
            for b in range(n):
                prods[(a, b)] = Pinv.apply(self.mul(cols[a], cols[b]))
        return SCAlgebra.from_products(self.field, n, prods, self.variety, mirror=False, name=self.name)

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, vectors) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def to_json(self) -> dict:
        F = self.field
        prods = []
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.table[i][j]
                if any(x != 0 for x in v):
                    prods.append([i + 1, j + 1, [F.to_json(x) for x in v]])
        return {"field": F.name, "dim": self.dim, "variety": self.variety, "products": prods}


# -- identities ---------------------------------------------------------

@dataclass
class IdentityReport:
    variety: str | None
    valid: bool
    failures: list

    def to_json(self) -> dict:
        return {"variety": self.variety, "valid": self.valid, "failures": self.failures[:20]}


def _sub(u, v):
    return [a - b for a, b in zip(u, v)]


def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def check_identity(A: SCAlgebra, variety=None) -> IdentityReport:
    """Check the defining identities of a variety on all basis pairs and triples."""
    variety = normalize_variety(variety if variety is not None else A.variety)
    n = A.dim
    e = [A.basis_vector(i) for i in range(n)]
    fails = []

    def nonzero(v):
        return any(x != 0 for x in v)

    if variety == "Lie":
        for i in range(n):
            if nonzero(A.mul(e[i], e[i])):
                fails.append({"identity": "alternating", "basis": [i + 1]})
            for j in range(i + 1, n):
                if nonzero(_add(A.mul(e[i], e[j]), A.mul(e[j], e[i]))):
                    fails.append({"identity": "antisymmetry", "basis": [i + 1, j + 1]})
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    jac = _add(_add(A.mul(e[i], A.mul(e[j], e[k])), A.mul(e[j], A.mul(e[k], e[i]))),
                               A.mul(e[k], A.mul(e[i], e[j])))
                    if nonzero(jac):
                        fails.append({"identity": "jacobi", "basis": [i + 1, j + 1, k + 1]})
    elif variety == "Leib":
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = A.mul(e[i], A.mul(e[j], e[k]))
                    rhs = _sub(A.mul(A.mul(e[i], e[j]), e[k]), A.mul(A.mul(e[i], e[k]), e[j]))
                    if nonzero(_sub(lhs, rhs)):
                        fails.append({"identity": "leibniz", "basis": [i + 1, j + 1, k + 1]})
    elif variety in ("Assoc", "Comm"):
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if nonzero(_sub(A.mul(A.mul(e[i], e[j]), e[k]), A.mul(e[i], A.mul(e[j], e[k])))):
                        fails.append({"identity": "associativity", "basis": [i + 1, j + 1, k + 1]})
        if variety == "Comm":
            for i in range(n):
                for j in range(i + 1, n):
                    if nonzero(_sub(A.mul(e[i], e[j]), A.mul(e[j], e[i]))):
                        fails.append({"identity": "commutativity", "basis": [i + 1, j + 1]})
    return IdentityReport(variety, not fails, fails)


def require_identities(A: SCAlgebra) -> SCAlgebra:
    rep = check_identity(A)
    if not rep.valid:
        raise InvalidAlgebra(f"{A.variety} identity fails: {rep.failures[0]}")
    return A


# -- subspace operations ----------------------------------------------------

def _check(A: SCAlgebra, *subs: Subspace):
    for S in subs:
        if S.n != A.dim or S.field != A.field:
            raise NotSubspace("subspace does not live in the algebra")


def product_space(A: SCAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """span{u v : u in U, v in V}."""
    _check(A, U, V)
    return A.span([A.mul(u, v) for u in U.basis for v in V.basis])


def mixed_product(A: SCAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """span{u v, v u}."""
    return product_space(A, U, V).join(product_space(A, V, U))


def subalgebra_closure(A: SCAlgebra, S: Subspace) -> Subspace:
    _check(A, S)
    cur = S
    while True:
        nxt = cur.join(product_space(A, cur, cur))
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def ideal_closure(A: SCAlgebra, S: Subspace) -> Subspace:
    _check(A, S)
    full = A.full()
    cur = S
    while True:
        nxt = cur.join(mixed_product(A, full, cur))
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def is_ideal(A: SCAlgebra, S: Subspace) -> bool:
    return mixed_product(A, A.full(), S) <= S


def is_subalgebra(A: SCAlgebra, S: Subspace) -> bool:
    return product_space(A, S, S) <= S


def center(A: SCAlgebra) -> Subspace:
    """{z : z x = x z = 0 for all x}."""
    n = A.dim
    rows = []
    for i in range(n):
        ei = A.basis_vector(i)
        rows.extend(A.right_mult(ei).rows)  # z |-> z e_i
        rows.extend(A.left_mult(ei).rows)   # z |-> e_i z
    M = Matrix.from_rows(A.field, rows, n)
    return Subspace.from_matrix_cols(field_kernel(M)) if n else A.zero()


def annihilator_of(A: SCAlgebra, S: Subspace) -> Subspace:
    """{z : z s = s z = 0 for all s in S}."""
    n = A.dim
    rows = []
    for s in S.basis:
        rows.extend(A.right_mult(s).rows)
        rows.extend(A.left_mult(s).rows)
    if not rows:
        return A.full()
    return Subspace.from_matrix_cols(field_kernel(Matrix.from_rows(A.field, rows, n)))
