"""Representations of Lie algebras and their tensor products (Kronecker sums)."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import AlgebraMismatch, RepAxiomFailure, WrongVariety
from ..exactlin import Matrix, Ring
from .algebra import SCAlgebra


@dataclass(frozen=True, eq=False)
class LieRep:
    algebra: SCAlgebra
    dim: int
    rho: tuple  # one dim x dim Matrix per basis element of the algebra

    def __post_init__(self):
        if self.algebra.variety != "Lie":
            raise WrongVariety("representations are defined for Lie algebras")
        if len(self.rho) != self.algebra.dim:
            raise RepAxiomFailure("need one matrix per basis element")
        for m in self.rho:
            if m.shape != (self.dim, self.dim):
                raise RepAxiomFailure("representation matrices have the wrong size")

    def act(self, x) -> Matrix:
        """rho(x) for a vector x of the algebra."""
        F = self.algebra.field
        out = Matrix.zeros(F, self.dim, self.dim)
        for c, m in zip(x, self.rho):
            if c != 0:
                out = out + m.scale(c)
        return out

    def axiom_failures(self) -> list[list[int]]:
        """Basis pairs (i, j) with rho([e_i, e_j]) != [rho(e_i), rho(e_j)]."""
        g = self.algebra
        bad = []
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = self.act(g.mul(g.basis_vector(i), g.basis_vector(j)))
                a, b = self.rho[i], self.rho[j]
                if not (lhs - (a @ b - b @ a)).is_zero():
                    bad.append([i + 1, j + 1])
        return bad

    def is_valid(self) -> bool:
        return not self.axiom_failures()

    def to_json(self) -> dict:
        return {"dim": self.dim, "rho": [m.to_json() for m in self.rho]}


def validated(rep: LieRep) -> LieRep:
    bad = rep.axiom_failures()
    if bad:
        raise RepAxiomFailure(f"representation axiom fails on basis pair {bad[0]}")
    return rep


def trivial_rep(g: SCAlgebra, dim: int) -> LieRep:
    return LieRep(g, dim, tuple(Matrix.zeros(g.field, dim, dim) for _ in range(g.dim)))


def adjoint_rep(g: SCAlgebra) -> LieRep:
    return LieRep(g, g.dim, tuple(g.left_mult(g.basis_vector(i)) for i in range(g.dim)))


def rep_tensor_lie(xi: LieRep, zeta: LieRep) -> LieRep:
    """x |-> xi(x) (x) 1 + 1 (x) zeta(x)."""
    if xi.algebra is not zeta.algebra and (xi.algebra.field != zeta.algebra.field
                                           or xi.algebra.table != zeta.algebra.table):
        raise AlgebraMismatch("representations of different Lie algebras")
    F = xi.algebra.field
    Ia, Ib = Matrix.identity(F, xi.dim), Matrix.identity(F, zeta.dim)
    rho = tuple(a.kron(Ib) + Ia.kron(b) for a, b in zip(xi.rho, zeta.rho))
    return validated(LieRep(xi.algebra, xi.dim * zeta.dim, rho))


def sl2(F: Ring) -> SCAlgebra:
    """Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return SCAlgebra.from_products(F, 3, {(0, 1): [0, 0, 1], (2, 0): [2, 0, 0], (2, 1): [0, -2, 0]},
                                   "Lie", name="sl2")


def sl2_standard_rep(F: Ring) -> LieRep:
    g = sl2(F)
    e = Matrix.from_rows(F, [[0, 1], [0, 0]])
    f = Matrix.from_rows(F, [[0, 0], [1, 0]])
    h = Matrix.from_rows(F, [[1, 0], [0, -1]])
    return validated(LieRep(g, 2, (e, f, h)))
