"""Extensions with abelian kernel: is the extension abelian, and its induced quotient."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotIdeal
from ..exactlin import Subspace
from .algebra import SCAlgebra, is_ideal
from .commutators import higgins_commutator, ternary_commutator
from .quotients import QuotientAlgebra, quotient_algebra


@dataclass
class ExtensionReport:
    self_commutator: Subspace      # [A, A]
    ternary: Subspace              # [A, A, X]
    abelian_kernel: bool
    abelian_extension: bool
    join_is_ideal: bool
    quotient: QuotientAlgebra

    def to_json(self) -> dict:
        return {
            "commutator_dim": self.self_commutator.dim,
            "ternary_dim": self.ternary.dim,
            "abelian_kernel": self.abelian_kernel,
            "abelian_extension": self.abelian_extension,
            "join_is_ideal": self.join_is_ideal,
            "quotient_dim": self.quotient.algebra.dim,
        }


def abelian_extension_analysis(X: SCAlgebra, A: Subspace) -> ExtensionReport:
    """For an ideal A of X: [A, A], [A, A, X], and X / ([A, A] v [A, A, X])."""
    if not is_ideal(X, A):
        raise NotIdeal("the kernel must be an ideal")
    AA = higgins_commutator(X, A, A)
    AAX = ternary_commutator(X, A, A, X.full())
    J = AA.join(AAX)
    ok = is_ideal(X, J)
    if not ok:
        raise NotIdeal("[A,A] v [A,A,X] is not an ideal; the commutator computation is inconsistent")
    return ExtensionReport(AA, AAX, AA.dim == 0, AAX.dim == 0, ok, quotient_algebra(X, J))
