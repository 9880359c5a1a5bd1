"""Randomised property suites; each case draws from its own seeded generator."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import operad2, randgen
from .exactlin import GF, QQ, ZZ, FgAbGroup, Matrix, Module
from .exactlin import modules as mod
from .homology import central_extension_validate, exactness_check, ganea_sequence
from .nilgrp import nil2_coproduct, symmetry_gp, twist_coproduct
from .nonassoc import commute_nil_birkhoff_test, j_filtration, left_normed_chain, rep_tensor_lie
from .nonassoc.reps import adjoint_rep, trivial_rep
from .xmod import AbCrossedModule, compare_tensors, same_invariants, unit_xmod, xmod_tensor

PRESETS = ("Comm", "Assoc", "Lie", "Leib")


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.passed == self.cases

    def to_json(self, timing: bool = True) -> dict:
        out = {"suite": self.name, "cases": self.cases, "passed": self.passed, "ok": self.ok,
               "failures": self.failures[:10]}
        if timing:
            out["elapsed_s"] = round(self.elapsed, 4)
        return out


def case_rng(seed: int, suite: str, i: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{i}")


def _run(name: str, cases: int, seed: int, body: Callable[[random.Random, int], str | None]) -> SuiteResult:
    res = SuiteResult(name)
    t0 = time.perf_counter()
    for i in range(cases):
        rng = case_rng(seed, name, i)
        res.cases += 1
        try:
            problem = body(rng, i)
        except Exception as exc:  # a crash is a failed case, reported with its seed
            problem = f"{type(exc).__name__}: {exc}"
        if problem:
            res.failures.append({"case": i, "seed": seed, "detail": problem})
        else:
            res.passed += 1
    res.elapsed = time.perf_counter() - t0
    return res


# -- operad suites ------------------------------------------------------------

def _case_operad(i: int) -> operad2.Nil2Operad:
    ring = (QQ, ZZ)[(i // len(PRESETS)) % 2]
    return operad2.preset_operad(PRESETS[i % len(PRESETS)], ring)


def bilinearity_case(rng: random.Random, op: operad2.Nil2Operad) -> str | None:
    A, B, C = (randgen.random_nil2_algebra(rng, op) for _ in range(3))
    for alg in (A, B, C):
        rep = operad2.validate_algebra(alg)
        if not rep.valid:
            return f"generator produced an invalid algebra: {rep.violations[0]}"
    lhs = operad2.cosmash2(operad2.coproduct2(A, B).algebra, C).algebra.A
    rhs = operad2.product2(operad2.cosmash2(A, C).algebra, operad2.cosmash2(B, C).algebra).algebra.A
    if not lhs.isomorphic(rhs):
        return f"cosmash(A+B, C) = {lhs} but cosmash(A,C) x cosmash(B,C) = {rhs}"
    return None


def bilinearity(cases: int, seed: int) -> SuiteResult:
    """cases triples for every preset operad over QQ and over ZZ."""
    total = cases * len(PRESETS) * 2
    return _run("bilinearity", total, seed, lambda rng, i: bilinearity_case(rng, _case_operad(i)))


def _random_operad_z(rng: random.Random) -> operad2.Nil2Operad:
    if rng.random() < 0.25:
        return operad2.operad_from_bifunctor_data(ZZ, Module.cyclic([2]), Matrix.identity(ZZ, 1), "mod2")
    return operad2.preset_operad(rng.choice(PRESETS), ZZ)


def rightexact_case(rng: random.Random) -> str | None:
    """X (x) K -> X (x) B -> X (x) A -> 0 for A = B / K."""
    op = _random_operad_z(rng)
    X = randgen.random_nil2_algebra(rng, op)
    Xbar = X.abar.module
    Bm = randgen.random_module(rng, ZZ, 3, 1)
    gens = randgen.random_submodule(rng, Bm, 2)
    q = mod.quotient(Bm, gens)
    Fk = Module.free(ZZ, gens.ncols)
    kq = mod.quotient(Fk, mod.kernel(gens, Fk, Bm) if gens.ncols else Matrix.zeros(ZZ, 0, 0))
    Km = kq.module
    incl = gens @ kq.section if gens.ncols else Matrix.zeros(ZZ, Bm.n, 0)
    mod.check_hom(incl, Km, Bm)
    I_x, I_p = mod.identity(Xbar), mod.identity(op.P2)

    def tens(M):
        return mod.tensor(mod.tensor(Xbar, M), op.P2)

    XK, XB, XA = tens(Km), tens(Bm), tens(q.module)
    f = I_x.kron(incl).kron(I_p)
    g = I_x.kron(q.proj).kron(I_p)
    if not mod.is_zero_map(g @ f, XA):
        return "composite is not zero"
    if not mod.exact_at(f, g, XK, XB, XA):
        return "not exact at X (x) B"
    if not mod.is_surjective(g, XB, XA):
        return "X (x) B -> X (x) A is not surjective"
    return None


def rightexact(cases: int, seed: int) -> SuiteResult:
    return _run("rightexact", cases, seed, lambda rng, i: rightexact_case(rng))


def symmetry_case(rng: random.Random, i: int) -> str | None:
    op = _case_operad(i)
    R = op.ring
    A, B = (operad2.abelian_algebra(op, randgen.random_module(rng, R, 2)) for _ in range(2))
    A2, B2 = (operad2.abelian_algebra(op, randgen.random_module(rng, R, 2)) for _ in range(2))
    f = operad2.AlgebraMap(A, A2, randgen.random_hom(rng, A.A, A2.A))
    g = operad2.AlgebraMap(B, B2, randgen.random_hom(rng, B.A, B2.A))
    target = operad2.cosmash2(B2, A2).algebra.A
    lhs = operad2.symmetry2(A2, B2) @ operad2.cosmash_map(f, g)
    rhs = operad2.cosmash_map(g, f) @ operad2.symmetry2(A, B)
    if not mod.maps_equal(lhs, rhs, target):
        return "symmetry is not natural"
    back = operad2.symmetry2(B, A) @ operad2.symmetry2(A, B)
    src = operad2.cosmash2(A, B).algebra.A
    if not mod.maps_equal(back, mod.identity(src), src):
        return "symmetry composed with its reverse is not the identity"
    # groups: the twist of the coproduct acts on commutators as -tau
    GA = FgAbGroup.from_orders(randgen.random_module(rng, ZZ, 2, 1).orders)
    GB = FgAbGroup.from_orders(randgen.random_module(rng, ZZ, 2, 1).orders)
    G = nil2_coproduct(GA, GB)
    if G.mod_t.n:
        t = [rng.randint(-3, 3) for _ in range(G.mod_t.n)]
        img = twist_coproduct(G.central(t))
        expect = symmetry_gp(GA, GB).apply(t)
        H = nil2_coproduct(GB, GA)
        if any(img.a) or any(img.b) or not H.mod_t.equal(list(img.t), expect):
            return "coproduct twist disagrees with -tau on the central part"
    return None


def symmetry(cases: int, seed: int) -> SuiteResult:
    return _run("symmetry", cases, seed, symmetry_case)


# -- algebra suites ---------------------------------------------------------------

GAMMA_VARIETIES = ("Lie", "Leib", "Assoc")


def gamma_case(rng: random.Random, i: int) -> str | None:
    F = (QQ, GF(5))[(i // len(GAMMA_VARIETIES)) % 2]
    v = GAMMA_VARIETIES[i % len(GAMMA_VARIETIES)]
    A = randgen.random_tagged_algebra(rng, F, v, 5)
    left = left_normed_chain(A, 4)
    for n in range(1, 5):
        if j_filtration(A, n) != left[n - 1]:
            return f"J_{n} differs from the left-normed term for a {v} algebra over {F.name}: {A.to_json()}"
    op = operad2.preset_operad(rng.choice(PRESETS), (QQ, ZZ)[i % 2])
    X = randgen.random_nil2_algebra(rng, op)
    J = operad2.j_filtration2(X)
    if not mod.sub_eq(X.A, J[1], X.D):
        return "operad algebra: gamma_2 differs from the decomposables"
    if not all(X.A.is_zero(c) for c in J[2].cols()):
        return "operad algebra: gamma_3 is nonzero"
    return None


def gamma(cases: int, seed: int) -> SuiteResult:
    return _run("gamma", cases, seed, gamma_case)


def ganea_case(rng: random.Random) -> str | None:
    B, K = randgen.random_central_extension(rng, QQ, 6)
    S = ganea_sequence(central_extension_validate(B, K))
    rep = exactness_check(S)
    if not rep.exact:
        return f"inexact at {rep.failing()} for {B.to_json()}"
    return None


def ganea(cases: int, seed: int) -> SuiteResult:
    return _run("ganea", cases, seed, lambda rng, i: ganea_case(rng))


def birkhoff_case(rng: random.Random) -> str | None:
    L = randgen.random_tagged_algebra(rng, QQ, "Leib", 5)
    for n in (1, 2):
        rep = commute_nil_birkhoff_test(L, n)
        if not rep.isomorphic:
            return f"n={n}: kernels differ ({rep.to_json()})"
    return None


def birkhoff(cases: int, seed: int) -> SuiteResult:
    return _run("birkhoff", cases, seed, lambda rng, i: birkhoff_case(rng))


def kronecker_case(rng: random.Random) -> str | None:
    F = randgen.random_field(rng)
    xi = randgen.random_lie_rep(rng, F)
    g = xi.algebra
    zeta = rng.choice([xi, trivial_rep(g, rng.randint(1, 2)), adjoint_rep(g)])
    T = rep_tensor_lie(xi, zeta)
    bad = T.axiom_failures()
    if bad:
        return f"representation axiom fails on {bad[0]}"
    return None


def kronecker(cases: int, seed: int) -> SuiteResult:
    return _run("kronecker", cases, seed, lambda rng, i: kronecker_case(rng))


# -- crossed modules ---------------------------------------------------------------

def random_abxmod(rng: random.Random, max_gens: int = 2) -> AbCrossedModule:
    Gm = randgen.random_module(rng, ZZ, max_gens)
    Am = randgen.random_module(rng, ZZ, max_gens)
    Gq = xmod_canon(Gm)
    Aq = xmod_canon(Am)
    d = randgen.random_hom(rng, Aq, Gq)
    return AbCrossedModule(Gq.invariants(), Aq.invariants(), d)


def xmod_canon(M: Module) -> Module:
    return Module(ZZ, M.invariants().invariant_factors)


def xmod_case(rng: random.Random) -> str | None:
    M1, M2 = random_abxmod(rng), random_abxmod(rng)
    c = compare_tensors(M1, M2)
    if not (c.surjective and c.kernel_matches and c.boundaries_commute):
        return f"precrossed comparison fails: {c.surjective, c.kernel_matches, c.boundaries_commute}"
    T12, T21 = xmod_tensor(M1, M2).result, xmod_tensor(M2, M1).result
    if not same_invariants(T12, T21):
        return "tensor is not symmetric up to isomorphism"
    U = unit_xmod()
    if not (same_invariants(xmod_tensor(M1, U).result, M1) and same_invariants(xmod_tensor(U, M1).result, M1)):
        return "(Z, 0, 0) is not a unit"
    return None


def xmod(cases: int, seed: int) -> SuiteResult:
    return _run("xmod", cases, seed, lambda rng, i: xmod_case(rng))


SUITES = {
    "bilinearity": bilinearity,
    "rightexact": rightexact,
    "symmetry": symmetry,
    "gamma": gamma,
    "ganea": ganea,
    "birkhoff": birkhoff,
    "xmod": xmod,
    "kronecker": kronecker,
}


def check_suites(selection, seed: int = 0, case_count: int = 20) -> list[SuiteResult]:
    out = []
    for name in selection:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
        out.append(SUITES[name](case_count, seed))
    return out
