"""Higgins commutators and the lower central series of structure-constant algebras."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotIdeal
from ..exactlin import Subspace
from .algebra import SCAlgebra, _check, ideal_closure, is_ideal, mixed_product, product_space, subalgebra_closure


def higgins_commutator(A: SCAlgebra, K: Subspace, L: Subspace) -> Subspace:
    """Span of all monomials in elements of K and L that involve both.

    With K' and L' the generated subalgebras, start from [K', L'] and keep
    multiplying by K', L' and the current space.  Any mixed monomial has a
    top product u v; either one side is already mixed (handled by
    induction) or u and v lie in K' and L' respectively.
    """
    _check(A, K, L)
    Kc = subalgebra_closure(A, K)
    Lc = subalgebra_closure(A, L)
    M = mixed_product(A, Kc, Lc)
    while True:
        nxt = M.join(mixed_product(A, M, Kc), mixed_product(A, M, Lc), product_space(A, M, M))
        if nxt.dim == M.dim:
            return M
        M = nxt


def ternary_commutator(A: SCAlgebra, K: Subspace, L: Subspace, M: Subspace) -> Subspace:
    """[[K, L], M] joined with [[M, K], L], for ideals K, L, M."""
    _check(A, K, L, M)
    for name, S in (("K", K), ("L", L), ("M", M)):
        if not is_ideal(A, S):
            raise NotIdeal(f"{name} is not an ideal")
    return higgins_commutator(A, higgins_commutator(A, K, L), M).join(
        higgins_commutator(A, higgins_commutator(A, M, K), L))


def product_degrees(A: SCAlgebra, top: int) -> list[Subspace]:
    """P_1..P_top where P_k is spanned by products with exactly k factors, any bracketing."""
    P = [None, A.full()]
    for k in range(2, top + 1):
        S = A.zero()
        for i in range(1, k):
            S = S.join(product_space(A, P[i], P[k - i]))
        P.append(S)
    return P


def j_filtration(A: SCAlgebra, n: int) -> Subspace:
    """J_n: span of all products with at least n factors.

    Every product tree with at least n >= 2 leaves contains a subtree with
    between n and 2n - 2 leaves, so J_n is the ideal generated by P_n + ... + P_(2n-2).
    """
    if n <= 1:
        return A.full()
    P = product_degrees(A, 2 * n - 2)
    S = A.zero().join(*P[n:])
    return ideal_closure(A, S)


def left_normed_chain(A: SCAlgebra, length: int) -> list[Subspace]:
    """L_1 = A, L_(k+1) = span{a l, l a : a in A, l in L_k}."""
    out = [A.full()]
    while len(out) < length:
        out.append(mixed_product(A, A.full(), out[-1]))
    return out


@dataclass
class LowerCentralSeries:
    chain: list            # gamma_1, gamma_2, ... up to the stable term, no repeats
    left_normed: list
    stable_index: int      # first n with gamma_n == gamma_(n+1)
    nilpotent: bool
    algebra: SCAlgebra
    complete: bool = True  # False when max_terms cut the chain before it stabilised

    @property
    def nilpotency_class(self) -> int | None:
        """Least c with gamma_(c+1) = 0."""
        if not self.nilpotent:
            return None
        for i, g in enumerate(self.chain):
            if g.dim == 0:
                return i
        return None

    def dims(self) -> list[int]:
        return [g.dim for g in self.chain]

    def gamma(self, n: int) -> Subspace:
        """gamma_n, extended by the stable term."""
        if n - 1 < len(self.chain):
            return self.chain[n - 1]
        if self.complete:
            return self.chain[-1]
        return j_filtration(self.algebra, n)


def lower_central_series(A: SCAlgebra, max_terms: int | None = None) -> LowerCentralSeries:
    """gamma_n computed as J_n until it stabilises."""
    limit = max_terms if max_terms is not None else A.dim + 2
    chain = [A.full()]
    complete = False
    while len(chain) < limit:
        if chain[-1].dim == 0:
            complete = True
            break
        nxt = j_filtration(A, len(chain) + 1)
        if nxt.dim == chain[-1].dim:
            complete = True
            break
        chain.append(nxt)
    complete = complete or chain[-1].dim == 0
    left = left_normed_chain(A, len(chain))
    return LowerCentralSeries(chain, left, len(chain), chain[-1].dim == 0, A, complete)
