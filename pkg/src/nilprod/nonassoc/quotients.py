"""Quotient algebras, nilpotent quotients and Birkhoff reflectors."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotIdeal, WrongVariety
from ..exactlin import Matrix, Subspace
from .algebra import SCAlgebra, ideal_closure, is_ideal
from .commutators import j_filtration


@dataclass(frozen=True, eq=False)
class QuotientAlgebra:
    algebra: SCAlgebra
    proj: Matrix        # dim(quotient) x dim(source)
    kernel: Subspace
    section: Matrix     # lifts quotient basis vectors to source coordinates

    def project(self, v) -> list:
        return self.proj.apply(list(v))


def quotient_algebra(A: SCAlgebra, I: Subspace, variety=None) -> QuotientAlgebra:
    """A/I in the basis given by the source basis vectors outside I's pivots."""
    if not is_ideal(A, I):
        raise NotIdeal("cannot form the quotient by a non-ideal")
    F = A.field
    cidx = I.complement_indices()
    m = len(cidx)

    def proj(v):
        r = I.reduce(v)
        return [r[c] for c in cidx]

    P = Matrix.from_cols(F, [proj(A.basis_vector(j)) for j in range(A.dim)], m) if A.dim else Matrix.zeros(F, 0, 0)
    prods = {}
    for a in range(m):
        for b in range(m):
            v = proj(A.mul(A.basis_vector(cidx[a]), A.basis_vector(cidx[b])))
            if any(x != 0 for x in v):
                prods[(a, b)] = v
    Q = SCAlgebra.from_products(F, m, prods, variety if variety is not None else A.variety,
                                mirror=False, name=f"{A.name}/I" if A.name else "")
    S = Matrix.from_cols(F, [A.basis_vector(c) for c in cidx], A.dim) if m else Matrix.zeros(F, A.dim, 0)
    return QuotientAlgebra(Q, P, I, S)


def nilpotentisation(A: SCAlgebra, n: int) -> QuotientAlgebra:
    """A / gamma_(n+1)(A); n = 1 gives the abelianisation."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return quotient_algebra(A, j_filtration(A, n + 1))


REFLECTORS = {
    "Lie-from-Leib": ("Leib", "Lie", ("Leib", "Lie")),
    "Comm-from-Assoc": ("Assoc", "Comm", ("Assoc", "Comm")),
}


def reflector_generators(A: SCAlgebra, target: str) -> Subspace:
    n = A.dim
    e = [A.basis_vector(i) for i in range(n)]
    vecs = []
    if target == "Lie-from-Leib":
        for i in range(n):
            vecs.append(A.mul(e[i], e[i]))
            for j in range(i + 1, n):
                vecs.append([x + y for x, y in zip(A.mul(e[i], e[j]), A.mul(e[j], e[i]))])
    elif target == "Comm-from-Assoc":
        for i in range(n):
            for j in range(i + 1, n):
                vecs.append([x - y for x, y in zip(A.mul(e[i], e[j]), A.mul(e[j], e[i]))])
    else:
        raise ValueError(f"unknown reflector {target!r}; expected one of {sorted(REFLECTORS)}")
    return A.span(vecs)


def birkhoff_reflect(A: SCAlgebra, target: str) -> QuotientAlgebra:
    """Lie-from-Leib kills the ideal of squares; Comm-from-Assoc kills commutators."""
    if target not in REFLECTORS:
        raise ValueError(f"unknown reflector {target!r}; expected one of {sorted(REFLECTORS)}")
    _, out_variety, accepted = REFLECTORS[target]
    if A.variety not in accepted:
        raise WrongVariety(f"{target} needs an algebra tagged {accepted[0]}, got {A.variety}")
    I = ideal_closure(A, reflector_generators(A, target))
    return quotient_algebra(A, I, out_variety)


@dataclass
class CommutationReport:
    n: int
    reflect_then_nil_kernel: Subspace
    nil_then_reflect_kernel: Subspace
    dims: tuple
    isomorphic: bool

    def to_json(self) -> dict:
        return {"n": self.n, "dims": list(self.dims), "isomorphic": self.isomorphic,
                "kernel_dims": [self.nil_then_reflect_kernel.dim, self.reflect_then_nil_kernel.dim]}


def _kernel_of(proj: Matrix, A: SCAlgebra) -> Subspace:
    from ..exactlin import field_kernel

    if proj.nrows == 0:
        return A.full()
    return Subspace.from_matrix_cols(field_kernel(proj))


def commute_nil_birkhoff_test(A: SCAlgebra, n: int, target: str = "Lie-from-Leib") -> CommutationReport:
    """Compare Reflect(Nil_n(A)) with Nil_n(Reflect(A)) through their kernels in A.

    Both are quotients of A by the composite map; the canonical comparison
    induced on generators is an isomorphism exactly when the kernels agree.
    """
    src = REFLECTORS[target][0] if target in REFLECTORS else None
    if A.variety not in REFLECTORS.get(target, (None, None, ()))[2]:
        raise WrongVariety(f"commutation test needs an algebra tagged {src}")
    N = nilpotentisation(A, n)
    R1 = birkhoff_reflect(N.algebra.with_variety(A.variety), target)
    first = R1.proj @ N.proj
    R = birkhoff_reflect(A, target)
    N2 = nilpotentisation(R.algebra, n)
    second = N2.proj @ R.proj
    k1, k2 = _kernel_of(first, A), _kernel_of(second, A)
    return CommutationReport(n, k2, k1, (R1.algebra.dim, N2.algebra.dim), k1 == k2)
