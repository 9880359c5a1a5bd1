"""Finitely generated abelian groups described by invariant factors."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from ..errors import DomainMismatch
from .matrix import Matrix
from .rings import ZZ
from .snf import smith_normal_form


def _canonical(orders: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors of a direct sum of cyclic groups Z/o_i (0 = Z)."""
    n = len(orders)
    if n == 0:
        return ()
    snf = smith_normal_form(Matrix.diag(ZZ, [abs(o) for o in orders]))
    finite = [snf.D[i, i] for i in range(snf.rank) if snf.D[i, i] != 1]
    return tuple(finite) + (0,) * (n - snf.rank)


@dataclass(frozen=True)
class FgAbGroup:
    """Z/d_1 + ... + Z/d_k + Z^r with d_1 | d_2 | ... (0 encodes a Z summand)."""

    invariant_factors: tuple
    presentation: Matrix | None = field(default=None, compare=False, repr=False)
    basis_witness: Matrix | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        inv = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", inv)
        finite = [d for d in inv if d != 0]
        if any(d < 2 for d in finite):
            raise ValueError(f"finite invariant factors must be >= 2: {inv}")
        if inv[: len(finite)] != tuple(finite):
            raise ValueError("finite factors must precede free summands")
        for a, b in zip(finite, finite[1:]):
            if b % a:
                raise ValueError(f"invariant factors {inv} do not form a divisibility chain")

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> "FgAbGroup":
        return cls(_canonical(orders))

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls((0,) * rank)

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(())

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.invariant_factors if d != 0)

    @property
    def order(self) -> int | None:
        """Cardinality, or None for an infinite group."""
        if self.rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def to_module(self):
        from .modules import Module

        return Module(ZZ, self.invariant_factors)

    def to_json(self) -> list[int]:
        return list(self.invariant_factors)

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.invariant_factors)


def fgab_from_presentation(M: Matrix) -> FgAbGroup:
    """Cokernel Z^cols / (row span of M); rows are relations."""
    from .modules import Module, quotient

    F = Module.free(ZZ, M.ncols)
    gens = M.T if M.nrows else Matrix.zeros(ZZ, M.ncols, 0)
    q = quotient(F, gens)
    return FgAbGroup(q.module.orders, presentation=M, basis_witness=q.proj)


def _diag_presentation(orders: Sequence[int]) -> Matrix:
    rows = []
    for i, o in enumerate(orders):
        if o:
            r = [0] * len(orders)
            r[i] = o
            rows.append(r)
    return Matrix.from_rows(ZZ, rows, len(orders))


def tensor_fgab(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """A (x) B; summand (i, j) of the presentation is generated by a_i (x) b_j."""
    orders = [gcd(d, e) for d in A.invariant_factors for e in B.invariant_factors]
    return fgab_from_presentation(_diag_presentation(orders))


def exterior_square_fgab(A: FgAbGroup) -> FgAbGroup:
    d = A.invariant_factors
    orders = [gcd(d[i], d[j]) for i in range(len(d)) for j in range(i + 1, len(d))]
    return fgab_from_presentation(_diag_presentation(orders))


def direct_sum_fgab(*groups: FgAbGroup) -> FgAbGroup:
    return FgAbGroup.from_orders([d for g in groups for d in g.invariant_factors])


@dataclass(frozen=True)
class Cokernel:
    group: FgAbGroup
    projection: Matrix


def map_cokernel(f: Matrix, A: FgAbGroup, B: FgAbGroup) -> Cokernel:
    """B / im(f) for f: A -> B given in canonical coordinates."""
    from .modules import check_hom, quotient

    MA, MB = A.to_module(), B.to_module()
    try:
        check_hom(f, MA, MB)
    except DomainMismatch as exc:
        raise DomainMismatch(f"map does not respect torsion: {exc}") from None
    q = quotient(MB, f)
    return Cokernel(FgAbGroup(q.module.orders), q.proj)
