"""Bilinear products of structure-constant algebras, and the bridge to the operad engine."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import NilprodError, VarietyMismatch
from ..exactlin import Matrix
from ..exactlin.modules import Module
from .. import operad2
from .algebra import SCAlgebra
from .commutators import lower_central_series
from .quotients import nilpotentisation

DOUBLED = ("Assoc", "Leib")


@dataclass
class BilinearProduct:
    variety: str
    dim: int
    labels: list            # ("ab", i, j) for abar_i (x) bbar_j, ("ba", j, i) for the reversed copy
    abelianization_dims: tuple
    operad_dim: int

    def to_json(self) -> dict:
        return {"variety": self.variety, "dim": self.dim, "abelianization_dims": list(self.abelianization_dims),
                "labels": [f"{k}:{i + 1},{j + 1}" for k, i, j in self.labels]}


def bilinear_product_sc(A: SCAlgebra, B: SCAlgebra, variety=None) -> BilinearProduct:
    """ab(A) (x) ab(B), doubled for associative and Leibniz algebras."""
    if A.field != B.field:
        raise VarietyMismatch("algebras over different fields")
    v = variety if variety is not None else A.variety
    if A.variety not in (v, None) or B.variety not in (v, None) or v is None:
        raise VarietyMismatch(f"cannot form a bilinear product of {A.variety} and {B.variety} as {v}")
    a = nilpotentisation(A, 1).algebra.dim
    b = nilpotentisation(B, 1).algebra.dim
    labels = [("ab", i, j) for i in range(a) for j in range(b)]
    if v in DOUBLED:
        labels += [("ba", j, i) for j in range(b) for i in range(a)]
    op = operad2.preset_operad(v, A.field)
    check = operad2.bilinear2(operad2.abelian_algebra(op, Module.free(A.field, a)),
                              operad2.abelian_algebra(op, Module.free(A.field, b)))
    if check.n != len(labels):
        raise NilprodError("operad engine disagrees with the structure-constant bilinear product")
    return BilinearProduct(v, len(labels), labels, (a, b), check.n)


def as_nil2_algebra(A: SCAlgebra) -> operad2.Nil2Algebra:
    """A tagged algebra of class at most two as an algebra over the matching preset operad."""
    lcs = lower_central_series(A, 3)
    if lcs.gamma(3).dim != 0:
        raise NilprodError("algebra has nilpotency class above two")
    v = A.variety
    if v is None:
        raise VarietyMismatch("untagged algebra has no preset operad")
    op = operad2.preset_operad(v, A.field)
    F, n = A.field, A.dim
    prods = {}
    for i in range(n):
        for j in range(n):
            prods[(i, j, 0)] = A.mul(A.basis_vector(i), A.basis_vector(j))
            if op.p == 2:
                prods[(i, j, 1)] = A.mul(A.basis_vector(j), A.basis_vector(i))
    gamma2 = lcs.gamma(2)
    D = gamma2.as_matrix() if gamma2.dim else Matrix.zeros(F, n, 0)
    return operad2.algebra_from_products(op, Module.free(F, n), D, prods, complete_symmetric=False)
