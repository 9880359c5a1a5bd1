"""Tensor products of abelian crossed and precrossed modules, and abelianisation of crossed modules.

A crossed module here is a triple (G, A, d) with d: A -> G a homomorphism
of finitely generated abelian groups in canonical coordinates; G is the
top group and A the middle one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import ActionInvalid, DomainMismatch
from .exactlin import FgAbGroup, Matrix, ZZ
from .exactlin import modules as mod
from .exactlin.modules import Module
from .nilgrp import FpGroupPresentation, parse_word


@dataclass(frozen=True, eq=False)
class AbCrossedModule:
    G: FgAbGroup   # top
    A: FgAbGroup   # middle
    d: Matrix      # A -> G

    def __post_init__(self):
        mod.check_hom(self.d, self.A.to_module(), self.G.to_module())

    @classmethod
    def build(cls, top: Sequence[int], middle: Sequence[int], boundary) -> "AbCrossedModule":
        G, A = FgAbGroup(tuple(top)), FgAbGroup(tuple(middle))
        d = boundary if isinstance(boundary, Matrix) else Matrix.from_rows(ZZ, boundary, len(A.invariant_factors))
        return cls(G, A, d)

    def invariants(self) -> dict:
        """Isomorphism invariants of the three layers and of ker d, coker d."""
        MA, MG = self.A.to_module(), self.G.to_module()
        ker = mod.submodule_type(MA, mod.kernel(self.d, MA, MG)).invariants()
        coker = mod.quotient(MG, self.d).module.invariants()
        return {"top": self.G.to_json(), "middle": self.A.to_json(),
                "kernel": ker.to_json(), "cokernel": coker.to_json()}

    def is_injective(self) -> bool:
        return mod.is_injective(self.d, self.A.to_module(), self.G.to_module())

    def to_json(self) -> dict:
        out = self.invariants()
        out["boundary"] = self.d.to_json()
        return out


def canonical_form(M: Module) -> mod.Quotient:
    """M rewritten in invariant-factor coordinates (proj and section to and from M)."""
    return mod.quotient(M, Matrix.zeros(M.ring, M.n, 0))


@dataclass(frozen=True, eq=False)
class XmodTensor:
    result: AbCrossedModule
    alpha: Matrix          # A(x)B -> (G(x)B) + (A(x)H)
    epsilon: Matrix        # (G(x)B) + (A(x)H) -> G(x)H
    middle_proj: Matrix    # (G(x)B) + (A(x)H) -> middle of the result
    summands: tuple        # modules G(x)B, A(x)H, A(x)B, G(x)H in pair-indexed form


def _layers(M1: AbCrossedModule, M2: AbCrossedModule):
    MG, MA = M1.G.to_module(), M1.A.to_module()
    MH, MB = M2.G.to_module(), M2.A.to_module()
    return MG, MA, MH, MB


def xmod_tensor(M1: AbCrossedModule, M2: AbCrossedModule) -> XmodTensor:
    """(G (x) H, coker alpha, epsilon) with alpha = (d (x) 1, -1 (x) delta)."""
    MG, MA, MH, MB = _layers(M1, M2)
    d, delta = M1.d, M2.d
    GB, AH, AB, GH = mod.tensor(MG, MB), mod.tensor(MA, MH), mod.tensor(MA, MB), mod.tensor(MG, MH)
    mid = mod.direct_sum(GB, AH)
    alpha = d.kron(mod.identity(MB)).vstack(-mod.identity(MA).kron(delta))
    eps = mod.identity(MG).kron(delta).hstack(d.kron(mod.identity(MH)))
    mod.check_hom(alpha, AB, mid)
    mod.check_hom(eps, mid, GH)
    if not mod.is_zero_map(eps @ alpha, GH):
        raise DomainMismatch("epsilon does not vanish on the image of alpha")
    q = mod.quotient(mid, alpha)
    top = canonical_form(GH)
    eps_bar = Matrix.from_cols(ZZ, [top.module.reduce(c) for c in (top.proj @ eps @ q.section).cols()],
                               top.module.n) if q.module.n else Matrix.zeros(ZZ, top.module.n, 0)
    res = AbCrossedModule(top.module.invariants(), q.module.invariants(), eps_bar)
    return XmodTensor(res, alpha, eps, q.proj, (GB, AH, AB, GH))


@dataclass(frozen=True, eq=False)
class PrecrossedTensor:
    top: Module
    middle: Module
    boundary: Matrix
    summands: tuple   # G(x)B, A(x)H, A(x)B

    def invariants(self) -> dict:
        return {"top": self.top.invariants().to_json(), "middle": self.middle.invariants().to_json()}

    def to_json(self) -> dict:
        out = self.invariants()
        out["boundary"] = self.boundary.to_json()
        return out


def pxmod_tensor(M1: AbCrossedModule, M2: AbCrossedModule) -> PrecrossedTensor:
    """(G (x) H, (G(x)B) + (A(x)H) + (A(x)B), <1 (x) delta, d (x) 1, d (x) delta>)."""
    MG, MA, MH, MB = _layers(M1, M2)
    d, delta = M1.d, M2.d
    GB, AH, AB, GH = mod.tensor(MG, MB), mod.tensor(MA, MH), mod.tensor(MA, MB), mod.tensor(MG, MH)
    mid = mod.direct_sum(GB, AH, AB)
    bd = mod.identity(MG).kron(delta).hstack(d.kron(mod.identity(MH)), d.kron(delta))
    mod.check_hom(bd, mid, GH)
    return PrecrossedTensor(GH, mid, bd, (GB, AH, AB))


@dataclass(frozen=True)
class Comparison:
    matrix: Matrix        # precrossed middle -> crossed middle
    kernel_gens: Matrix   # generators of the expected kernel
    surjective: bool
    kernel_matches: bool
    boundaries_commute: bool


def compare_tensors(M1: AbCrossedModule, M2: AbCrossedModule) -> Comparison:
    """The map (x, y, z) |-> [(x + (d (x) 1) z, y)] from the precrossed to the crossed middle term.

    Its kernel is generated by (-(d (x) 1) u, -(1 (x) delta) v, u + v), i.e.
    by the image of alpha transported into the three-summand module.
    """
    X = xmod_tensor(M1, M2)
    P = pxmod_tensor(M1, M2)
    MG, MA, MH, MB = _layers(M1, M2)
    GB, AH, AB = P.summands
    d, delta = M1.d, M2.d
    dB = d.kron(mod.identity(MB))
    Adelta = mod.identity(MA).kron(delta)
    R = ZZ
    # (x, y, z) |-> (x + dB z, y) in (G(x)B) + (A(x)H)
    lift = mod.identity(mod.direct_sum(GB, AH)).hstack(dB.vstack(Matrix.zeros(R, AH.n, AB.n)))
    c = X.middle_proj @ lift
    Q = X.result.A.to_module()
    c = Matrix.from_cols(R, [Q.reduce(col) for col in c.cols()], Q.n) if c.ncols else c
    beta = (-dB).hstack(Matrix.zeros(R, GB.n, AB.n)).vstack(
        Matrix.zeros(R, AH.n, AB.n).hstack(-Adelta),
        mod.identity(AB).hstack(mod.identity(AB)))
    ker = mod.kernel(c, P.middle, Q)
    surj = mod.is_surjective(c, P.middle, Q)
    kmatch = mod.sub_eq(P.middle, ker, beta)
    # boundary compatibility: eps_bar o c == precrossed boundary, in canonical top coordinates
    top = canonical_form(P.top)
    lhs = X.result.d @ c
    rhs = top.proj @ P.boundary
    commute = mod.maps_equal(lhs, rhs, top.module)
    return Comparison(c, beta, surj, kmatch, commute)


def unit_xmod() -> AbCrossedModule:
    """(Z, 0, 0): the unit for the tensor product."""
    return AbCrossedModule(FgAbGroup.free(1), FgAbGroup.trivial(), Matrix.zeros(ZZ, 1, 0))


def zero_xmod() -> AbCrossedModule:
    return AbCrossedModule(FgAbGroup.trivial(), FgAbGroup.trivial(), Matrix.zeros(ZZ, 0, 0))


def free_rank_one_xmod() -> AbCrossedModule:
    """(Z + Z, Z, inclusion of the second summand)."""
    return AbCrossedModule(FgAbGroup.free(2), FgAbGroup.free(1), Matrix.from_rows(ZZ, [[0], [1]]))


def same_invariants(M1: AbCrossedModule, M2: AbCrossedModule) -> bool:
    return M1.invariants() == M2.invariants()


# -- abelianisation of a group crossed module ------------------------------------

@dataclass(frozen=True)
class GroupXModInput:
    G: FpGroupPresentation
    A: FpGroupPresentation
    action: Mapping[str, Sequence[Sequence[int]]]  # G generator -> matrix on A generators (columns = images)
    boundary: Mapping[str, str]                       # A generator -> word in G


def _exp_vec(word, n):
    v = [0] * n
    for g, e in word:
        v[g] += e
    return v


def _module_inverse(T: Matrix, Q: Module) -> Matrix | None:
    """S with T S = 1 on Q, or None if T is not invertible there."""
    tors = Q.torsion_lattice()
    L = T.hstack(Matrix.from_cols(ZZ, tors, Q.n)) if tors else T
    cols = []
    for k in range(Q.n):
        x = mod.solve(L, Q.basis_vector(k)) if L.ncols else None
        if x is None:
            return None
        cols.append(Q.reduce(x[: Q.n]))
    return Matrix.from_cols(ZZ, cols, Q.n) if cols else Matrix.zeros(ZZ, 0, 0)


def xmod_abelianize(X: GroupXModInput) -> AbCrossedModule:
    """(G/[G,G], A/[A,G], induced boundary) from abelianised action data."""
    nG, nA = len(X.G.generators), len(X.A.generators)
    FG, FA = Module.free(ZZ, nG), Module.free(ZZ, nA)
    qG = mod.quotient(FG, X.G.exponent_matrix().T if X.G.relators else Matrix.zeros(ZZ, nG, 0))
    qabA = mod.quotient(FA, X.A.exponent_matrix().T if X.A.relators else Matrix.zeros(ZZ, nA, 0))
    abA = qabA.module

    # action matrices, checked to be automorphisms of ab(A)
    acts = {}
    for g in X.G.generators:
        raw = X.action.get(g)
        if raw is None:
            T = Matrix.identity(ZZ, nA)
        else:
            T = Matrix.from_rows(ZZ, raw, nA)
            if T.shape != (nA, nA):
                raise ActionInvalid(f"action of {g} must be a {nA}x{nA} matrix")
        Tc = qabA.proj @ T @ qabA.section
        if not mod.is_hom(Tc, abA, abA):
            raise ActionInvalid(f"action of {g} does not preserve the relations of A")
        inv = _module_inverse(Tc, abA)
        if inv is None:
            raise ActionInvalid(f"action of {g} is not invertible on ab(A)")
        acts[g] = (Tc, inv)
    # relators of G must act trivially
    for rel in X.G.relators:
        M = mod.identity(abA)
        for gi, e in rel:
            T, Ti = acts[X.G.generators[gi]]
            step = T if e > 0 else Ti
            for _ in range(abs(e)):
                M = M @ step
        if not mod.maps_equal(M, mod.identity(abA), abA):
            raise ActionInvalid(f"relator {X.G.relator_strings()[X.G.relators.index(rel)]} acts nontrivially")

    # boundary on A generators as exponent sums in G
    bcols = []
    for a in X.A.generators:
        w = parse_word(X.boundary.get(a, ""), X.G.generators)
        bcols.append(_exp_vec(w, nG))
    Bexp = Matrix.from_cols(ZZ, bcols, nG) if bcols else Matrix.zeros(ZZ, nG, 0)
    dab = qG.proj @ Bexp @ qabA.section
    Gab = qG.module
    if not mod.is_hom(dab, abA, Gab):
        raise ActionInvalid("boundary does not respect the relations of A")
    for g, (T, _) in acts.items():
        if not mod.maps_equal(dab @ T, dab, Gab):
            raise ActionInvalid(f"boundary is not equivariant for the action of {g}")

    # A/[A,G]: kill (g.a - a)
    cols = []
    for T, _ in acts.values():
        D = T - mod.identity(abA)
        cols.extend(D.cols())
    rel = Matrix.from_cols(ZZ, cols, abA.n) if cols else Matrix.zeros(ZZ, abA.n, 0)
    qc = mod.quotient(abA, rel)
    d_bar = dab @ qc.section
    d_bar = Matrix.from_cols(ZZ, [Gab.reduce(c) for c in d_bar.cols()], Gab.n) if d_bar.ncols \
        else Matrix.zeros(ZZ, Gab.n, 0)
    return AbCrossedModule(Gab.invariants(), qc.module.invariants(), d_bar)
