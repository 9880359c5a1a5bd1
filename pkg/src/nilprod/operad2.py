"""Two-step nilpotent operads with P(1) = R and their algebras.

An operad is a base ring R, a module P2 of binary operations and an
involution t on P2 (the action of the transposition).  An algebra is a
module A, a submodule D of decomposables and a multiplication
``mu: A (x) A (x) P2 -> A`` that vanishes on D in either slot, has image D
and satisfies ``mu(a, b, x) = mu(b, a, t x)``.  Triples are indexed as
``(i * n + j) * p + k`` with n = A.n and p = P2.n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .errors import BadCharacteristic, DomainMismatch, InvalidAlgebra, NotInvolution, OperadMismatch
from .exactlin import Matrix, Ring, block_diag
from .exactlin import modules as mod
from .exactlin.modules import Module

VARIETIES = ("Comm", "Assoc", "Lie", "Leib", "Mod")


@dataclass(frozen=True)
class Nil2Operad:
    ring: Ring
    P2: Module
    t: Matrix
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.P2.ring != self.ring:
            raise OperadMismatch("P2 is not a module over the base ring")
        try:
            mod.check_hom(self.t, self.P2, self.P2)
        except DomainMismatch as exc:
            raise NotInvolution(f"t is not an endomorphism of P2: {exc}") from None
        if not mod.maps_equal(self.t @ self.t, mod.identity(self.P2), self.P2):
            raise NotInvolution("t composed with itself is not the identity")

    @property
    def p(self) -> int:
        return self.P2.n

    def describe(self) -> dict:
        return {"name": self.name, "ring": self.ring.name, "P2": self.P2.describe(),
                "t": self.t.to_json()}


def preset_operad(variety: str, R: Ring) -> Nil2Operad:
    """Comm (trivial S2 action), Assoc/Leib (regular), Lie (sign) or Mod (P2 = 0)."""
    if variety == "Comm":
        return Nil2Operad(R, Module.free(R, 1), Matrix.identity(R, 1), "Comm")
    if variety in ("Assoc", "Leib"):
        return Nil2Operad(R, Module.free(R, 2), Matrix.from_rows(R, [[0, 1], [1, 0]]), variety)
    if variety == "Lie":
        if R.characteristic == 2:
            raise BadCharacteristic("the sign representation is trivial in characteristic 2")
        return Nil2Operad(R, Module.free(R, 1), Matrix.from_rows(R, [[-1]]), "Lie")
    if variety == "Mod":
        return Nil2Operad(R, Module.free(R, 0), Matrix.zeros(R, 0, 0), "Mod")
    raise ValueError(f"unknown variety {variety!r}; expected one of {VARIETIES}")


def operad_from_bifunctor_data(R: Ring, M: Module, t: Matrix, name: str = "") -> Nil2Operad:
    """The operad with P(1) = R, P(2) = M and S2 acting through t."""
    return Nil2Operad(R, M, t, name)


# -- algebras -----------------------------------------------------------

def _triple_module(A: Module, P2: Module) -> Module:
    return mod.tensor(mod.tensor(A, A), P2)


@dataclass(frozen=True, eq=False)
class Nil2Algebra:
    operad: Nil2Operad
    A: Module
    D: Matrix
    mu: Matrix

    def __post_init__(self):
        n, p = self.A.n, self.operad.p
        if self.A.ring != self.operad.ring:
            raise OperadMismatch("module and operad have different base rings")
        if self.D.nrows != n:
            raise InvalidAlgebra("decomposables do not live in the module")
        if self.mu.shape != (n, n * n * p):
            raise InvalidAlgebra(f"multiplication matrix must be {n}x{n * n * p}, got {self.mu.shape}")

    @property
    def ring(self) -> Ring:
        return self.operad.ring

    @property
    def n(self) -> int:
        return self.A.n

    def product(self, u: Sequence, v: Sequence, x: Sequence) -> list:
        """mu(u (x) v (x) x)."""
        n, p = self.n, self.operad.p
        out = [self.ring.zero] * n
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                for k, c in enumerate(x):
                    if c == 0:
                        continue
                    coef = a * b * c
                    col = (i * n + j) * p + k
                    for r in range(n):
                        m = self.mu.rows[r][col]
                        if m != 0:
                            out[r] += coef * m
        return self.A.reduce(out)

    @cached_property
    def abar(self) -> mod.Quotient:
        return mod.quotient(self.A, self.D)

    @cached_property
    def mu_bar(self) -> Matrix:
        """Abar (x) Abar (x) P2 -> A, through the section of A -> Abar."""
        s = self.abar.section
        return self.mu @ s.kron(s).kron(mod.identity(self.operad.P2))

    def is_abelian(self) -> bool:
        return mod.is_zero_map(self.mu, self.A)


def _kron_vec(u: Sequence, v: Sequence) -> list:
    out = []
    for a in u:
        if a == 0:
            out.extend([a] * len(v))
        else:
            out.extend(a * b for b in v)
    return out


@dataclass
class ValidationReport:
    valid: bool
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"valid": self.valid, "violations": self.violations}


def validate_algebra(alg: Nil2Algebra) -> ValidationReport:
    A, P2, mu = alg.A, alg.operad.P2, alg.mu
    R = alg.ring
    n, p = A.n, P2.n
    issues = []
    try:
        mod.check_hom(alg.D, Module.free(R, alg.D.ncols), A)
    except DomainMismatch as exc:  # pragma: no cover - free source always works
        issues.append({"check": "decomposables", "detail": str(exc)})
    try:
        mod.check_hom(mu, _triple_module(A, P2), A)
    except DomainMismatch as exc:
        issues.append({"check": "torsion", "detail": str(exc)})
    # vanishing on decomposables in either slot
    for d in alg.D.cols():
        for j in range(n):
            for k in range(p):
                ej, ek = A.basis_vector(j), P2.basis_vector(k)
                for label, val in (("left", alg.product(d, ej, ek)), ("right", alg.product(ej, d, ek))):
                    if not A.is_zero(val):
                        issues.append({"check": "decomposable_slot", "slot": label,
                                       "witness": [R.to_json(x) for x in d], "generator": j,
                                       "operation": k})
    # image equals D
    img = mod.image_gens(mu, A)
    if not mod.sub_le(A, img, alg.D):
        for c in img.cols():
            if not mod.contains(A, alg.D, c):
                issues.append({"check": "image_in_decomposables", "witness": [R.to_json(x) for x in c]})
                break
    if not mod.sub_le(A, alg.D, img):
        for c in alg.D.cols():
            if not mod.contains(A, img, c):
                issues.append({"check": "surjective_onto_decomposables",
                               "witness": [R.to_json(x) for x in c]})
                break
    # symmetry mu(a, b, x) = mu(b, a, t x)
    sym = mu @ mod.twist(A, A).kron(alg.operad.t)
    for col in range(n * n * p):
        if not A.equal(mu.col(col), sym.col(col)):
            i, rest = divmod(col, n * p)
            j, k = divmod(rest, p)
            issues.append({"check": "symmetry", "triple": [i, j, k]})
            break
    return ValidationReport(not issues, issues)


def require_valid(alg: Nil2Algebra) -> Nil2Algebra:
    rep = validate_algebra(alg)
    if not rep.valid:
        raise InvalidAlgebra(f"invalid algebra: {rep.violations[0]}")
    return alg


def abelian_algebra(operad: Nil2Operad, A: Module) -> Nil2Algebra:
    R = operad.ring
    return Nil2Algebra(operad, A, Matrix.zeros(R, A.n, 0), Matrix.zeros(R, A.n, A.n * A.n * operad.p))


def algebra_from_products(operad: Nil2Operad, A: Module, D: Matrix,
                          products: Mapping[tuple[int, int, int], Sequence],
                          complete_symmetric: bool = True) -> Nil2Algebra:
    """Build mu from values on generator triples; unstated triples are zero.

    With ``complete_symmetric`` a pair (j, i) that has no stated value is
    filled in from (i, j) using mu(b, a, y) = mu(a, b, t y).
    """
    R = operad.ring
    n, p = A.n, operad.p
    cols = {key: list(v) for key, v in products.items()}
    if complete_symmetric:
        stated = {(i, j) for i, j, _ in products}
        t = operad.t
        for i, j in list(stated):
            if (j, i) in stated:
                continue
            for m in range(p):
                acc = [R.zero] * n
                for k in range(p):
                    c = t[k, m]
                    if c != 0 and (i, j, k) in cols:
                        acc = [x + c * y for x, y in zip(acc, cols[(i, j, k)])]
                cols[(j, i, m)] = acc
    data = [[R.zero] * (n * n * p) for _ in range(n)]
    for (i, j, k), v in cols.items():
        if not (0 <= i < n and 0 <= j < n and 0 <= k < p):
            raise InvalidAlgebra(f"product index {(i, j, k)} out of range")
        for r in range(n):
            data[r][(i * n + j) * p + k] = R.convert(v[r])
    return Nil2Algebra(operad, A, D, Matrix.from_rows(R, data, n * n * p))


def free_nil2_algebra(operad: Nil2Operad, V: Module, relations: Matrix | None = None) -> Nil2Algebra:
    """The free class-two algebra on V, optionally modulo relations among the products.

    Decomposables are the coinvariants of V (x) V (x) P2 under
    a (x) b (x) x ~ b (x) a (x) t x; ``relations`` (columns in V (x) V (x) P2
    coordinates) are killed as well.
    """
    R = operad.ring
    T = _triple_module(V, operad.P2)
    sigma = mod.twist(V, V).kron(operad.t)
    rel_cols = (sigma - mod.identity(T)).cols()
    if relations is not None:
        rel_cols += relations.cols()
    gens = Matrix.from_cols(R, rel_cols, T.n) if rel_cols else Matrix.zeros(R, T.n, 0)
    q = mod.quotient(T, gens)
    W = q.module
    A = mod.direct_sum(V, W)
    D = mod.injection([V, W], 1)
    mu = Matrix.zeros(R, V.n, T.n).vstack(q.proj)
    # mu is defined on A (x) A (x) P2; only V-slots contribute
    n, p = A.n, operad.p
    data = [[R.zero] * (n * n * p) for _ in range(n)]
    for i in range(V.n):
        for j in range(V.n):
            for k in range(p):
                src = (i * V.n + j) * p + k
                dst = (i * n + j) * p + k
                for r in range(n):
                    data[r][dst] = mu[r, src]
    return Nil2Algebra(operad, A, D, Matrix.from_rows(R, data, n * n * p))


def _check_same_operad(*algs: Nil2Algebra):
    op = algs[0].operad
    for a in algs[1:]:
        if a.operad != op:
            raise OperadMismatch("algebras are over different operads")


# -- maps ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AlgebraMap:
    source: Nil2Algebra
    target: Nil2Algebra
    matrix: Matrix

    def check(self) -> list[str]:
        """Violations of the algebra-map conditions (empty when valid)."""
        S, T, f = self.source, self.target, self.matrix
        problems = []
        if not mod.is_hom(f, S.A, T.A):
            return ["not a module homomorphism"]
        for d in S.D.cols():
            if not mod.contains(T.A, T.D, f.apply(d)):
                problems.append("decomposables not preserved")
                break
        lhs = f @ S.mu
        rhs = T.mu @ f.kron(f).kron(mod.identity(S.operad.P2))
        if not mod.maps_equal(lhs, rhs, T.A):
            problems.append("multiplication not preserved")
        return problems

    def is_valid(self) -> bool:
        return not self.check()

    def induced_on_abar(self) -> Matrix:
        """The map Abar_source -> Abar_target."""
        return self.target.abar.proj @ self.matrix @ self.source.abar.section


# -- coproduct, product, cosmash ------------------------------------------

@dataclass(frozen=True, eq=False)
class Coproduct:
    algebra: Nil2Algebra
    left: Nil2Algebra
    right: Nil2Algebra
    inj_left: Matrix
    inj_right: Matrix
    mixed: Module  # Abar (x) Bbar (x) P2, the third summand

    @property
    def mixed_inclusion(self) -> Matrix:
        return mod.injection([self.left.A, self.right.A, self.mixed], 2)

    def copair(self, f: Matrix, g: Matrix, C: Nil2Algebra) -> Matrix:
        """The map A+B -> C restricting to f on A and g on B."""
        A, B = self.left, self.right
        P = mod.identity(A.operad.P2)
        mixed = C.mu @ (f @ A.abar.section).kron(g @ B.abar.section).kron(P)
        return f.hstack(g, mixed)

    def comparison(self) -> Matrix:
        """The canonical map A+B -> A x B (kills the mixed summand)."""
        R = self.algebra.ring
        a, b, m = self.left.n, self.right.n, self.mixed.n
        return block_diag(R, mod.identity(self.left.A), mod.identity(self.right.A)).hstack(
            Matrix.zeros(R, a + b, m))


def coproduct2(A: Nil2Algebra, B: Nil2Algebra) -> Coproduct:
    _check_same_operad(A, B)
    op = A.operad
    R, P2, p = op.ring, op.P2, op.p
    Abar, Bbar = A.abar, B.abar
    M = mod.tensor(mod.tensor(Abar.module, Bbar.module), P2)
    C = mod.direct_sum(A.A, B.A, M)
    na, nb, nm, n = A.n, B.n, M.n, C.n
    offs = (0, na, na + nb)
    data = [[R.zero] * (n * n * p) for _ in range(n)]

    def put(i, j, k, vec, off):
        col = (i * n + j) * p + k
        for r, x in enumerate(vec):
            if x != 0:
                data[off + r][col] = x

    for i in range(na):
        for j in range(na):
            for k in range(p):
                put(i, j, k, A.mu.col((i * na + j) * p + k), 0)
    for i in range(nb):
        for j in range(nb):
            for k in range(p):
                put(na + i, na + j, k, B.mu.col((i * nb + j) * p + k), na)
    pa, pb = Abar.proj, Bbar.proj
    for i in range(na):
        for j in range(nb):
            ab = _kron_vec(pa.col(i), pb.col(j))
            for k in range(p):
                ek = P2.basis_vector(k)
                put(i, na + j, k, _kron_vec(ab, ek), offs[2])
                put(na + j, i, k, _kron_vec(ab, op.t.col(k)), offs[2])
    mu = Matrix.from_rows(R, data, n * n * p)
    D = block_diag(R, A.D, B.D, mod.identity(M))
    alg = Nil2Algebra(op, C, D, mu)
    mods = [A.A, B.A, M]
    return Coproduct(alg, A, B, mod.injection(mods, 0), mod.injection(mods, 1), M)


@dataclass(frozen=True, eq=False)
class Product:
    algebra: Nil2Algebra
    proj_left: Matrix
    proj_right: Matrix


def product2(A: Nil2Algebra, B: Nil2Algebra) -> Product:
    _check_same_operad(A, B)
    op = A.operad
    R, p = op.ring, op.p
    C = mod.direct_sum(A.A, B.A)
    na, nb, n = A.n, B.n, C.n
    data = [[R.zero] * (n * n * p) for _ in range(n)]
    for src, off, sz in ((A, 0, na), (B, na, nb)):
        for i in range(sz):
            for j in range(sz):
                for k in range(p):
                    col = src.mu.col((i * sz + j) * p + k)
                    for r, x in enumerate(col):
                        data[off + r][((off + i) * n + off + j) * p + k] = x
    alg = Nil2Algebra(op, C, block_diag(R, A.D, B.D), Matrix.from_rows(R, data, n * n * p))
    return Product(alg, mod.projection([A.A, B.A], 0), mod.projection([A.A, B.A], 1))


@dataclass(frozen=True, eq=False)
class Cosmash:
    algebra: Nil2Algebra
    left: Nil2Algebra
    right: Nil2Algebra

    @cached_property
    def coproduct(self) -> Coproduct:
        return coproduct2(self.left, self.right)

    @property
    def inclusion(self) -> Matrix:
        """Into the coproduct's module, as its third summand."""
        return mod.injection([self.left.A, self.right.A, self.algebra.A], 2)


def cosmash2(A: Nil2Algebra, B: Nil2Algebra) -> Cosmash:
    """Abar (x) Bbar (x) P2 as an abelian algebra, the mixed summand of A+B."""
    _check_same_operad(A, B)
    M = mod.tensor(mod.tensor(A.abar.module, B.abar.module), A.operad.P2)
    return Cosmash(abelian_algebra(A.operad, M), A, B)


def abelianization2(A: Nil2Algebra) -> tuple[Nil2Algebra, Matrix]:
    """Abar with zero multiplication, and the quotient map A -> Abar."""
    return abelian_algebra(A.operad, A.abar.module), A.abar.proj


def bilinear2(A: Nil2Algebra, B: Nil2Algebra) -> Nil2Algebra:
    """The bilinear product: cosmash of the abelianisations."""
    _check_same_operad(A, B)
    return cosmash2(abelianization2(A)[0], abelianization2(B)[0]).algebra


def symmetry2(A: Nil2Algebra, B: Nil2Algebra) -> Matrix:
    """a (x) b (x) x |-> b (x) a (x) t x, from cosmash(A, B) to cosmash(B, A)."""
    _check_same_operad(A, B)
    return mod.twist(A.abar.module, B.abar.module).kron(A.operad.t)


def cosmash_map(f: AlgebraMap, g: AlgebraMap) -> Matrix:
    """Functoriality: f: A -> A', g: B -> B' induce cosmash(A, B) -> cosmash(A', B')."""
    _check_same_operad(f.source, g.source)
    return f.induced_on_abar().kron(g.induced_on_abar()).kron(mod.identity(f.source.operad.P2))


def lcs2(A: Nil2Algebra) -> list[Matrix]:
    """[gamma_1, gamma_2, gamma_3] = [A, D, 0] as generator matrices."""
    R = A.ring
    return [mod.identity(A.A), A.D, Matrix.zeros(R, A.n, 0)]


def describe_module(M: Module) -> dict:
    return M.describe()


def j_filtration2(A: Nil2Algebra) -> list[Matrix]:
    """J_1, J_2, J_3 read off the multiplication: all of A, the image of mu, and mu with a J_2 slot."""
    R = A.ring
    n, p = A.n, A.operad.p
    J2 = mod.image_gens(A.mu, A.A)
    cols = []
    for d in J2.cols():
        for j in range(n):
            for k in range(p):
                ej, ek = A.A.basis_vector(j), A.operad.P2.basis_vector(k)
                cols.append(A.product(d, ej, ek))
                cols.append(A.product(ej, d, ek))
    J3 = mod.image_gens(Matrix.from_cols(R, cols, n), A.A) if cols else Matrix.zeros(R, n, 0)
    return [mod.identity(A.A), J2, J3]
