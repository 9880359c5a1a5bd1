"""Bilinear products of abelianisations across the standard varieties.

Each row computes X (x) Y for concrete X, Y through the engine and compares
it with a closed form that only uses gcds and products of dimensions.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from . import operad2
from .errors import BadCharacteristic
from .exactlin import ZZ, FgAbGroup, Module, Ring
from .nilgrp import FpGroupPresentation, bilinear_product_gp
from .nonassoc import SCAlgebra, bilinear_product_sc

ROWS = (
    ("Gp", None, "ab(X) (x) ab(Y)", 1),
    ("CRng/CAlg", "Comm", "A (x) B", 1),
    ("Alg", "Assoc", "(A (x) B) + (B (x) A)", 2),
    ("Lie", "Lie", "A (x) B", 1),
    ("Leib", "Leib", "(A (x) B) + (B (x) A)", 2),
    ("Mod_R", "Mod", "0", 0),
)


@dataclass
class Table1Row:
    row: str
    formula: str
    result: object = None
    expected: object = None
    cross_check: object = None
    skipped: str = ""

    @property
    def match(self) -> bool:
        if self.skipped:
            return True
        ok = self.result == self.expected
        return ok and (self.cross_check is None or self.cross_check == self.expected)

    def to_json(self) -> dict:
        out = {"row": self.row, "formula": self.formula, "result": self.result,
               "expected": self.expected, "match": self.match}
        if self.cross_check is not None:
            out["cross_check"] = self.cross_check
        if self.skipped:
            out["skipped"] = self.skipped
        return out


def abelian_presentation(orders: Sequence[int]) -> FpGroupPresentation:
    """A group whose abelianisation has the given cyclic orders: generators commute and x_i^o = 1."""
    gens = [f"x{i + 1}" for i in range(len(orders))]
    rels = [f"{g}^{o}" for g, o in zip(gens, orders) if o]
    rels += [f"[{gens[i]},{gens[j]}]" for i in range(len(gens)) for j in range(i + 1, len(gens))]
    return FpGroupPresentation.parse(gens, rels)


def closed_form_tensor(left: Sequence[int], right: Sequence[int]) -> FgAbGroup:
    """Z/m (x) Z/n = Z/gcd(m, n), with 0 standing for Z."""
    return FgAbGroup.from_orders([gcd(m, n) for m in left for n in right])


def _expected(left, right, R: Ring, copies: int):
    if R.is_field:
        return copies * len(left) * len(right)
    return list(FgAbGroup.from_orders(list(closed_form_tensor(left, right).invariant_factors) * copies)
                .invariant_factors)


def _measure(M: Module):
    if M.ring.is_field:
        return M.n
    return list(M.invariants().invariant_factors)


def table1(R: Ring, dims: Sequence[int] = (1, 1), left: Sequence[int] | None = None,
           right: Sequence[int] | None = None) -> list[Table1Row]:
    """One row per variety for X, Y with the given abelianisations.

    Over a field the abelianisations are R^a and R^b.  Over Z they are Z^a
    and Z^b unless explicit cyclic orders ``left`` / ``right`` are given.
    The group row is always computed over Z.
    """
    a, b = dims
    zl = list(left) if left is not None else [0] * a
    zr = list(right) if right is not None else [0] * b
    if R.is_field:
        ml, mr = Module.free(R, a), Module.free(R, b)
    else:
        ml, mr = Module(ZZ, tuple(zl)), Module(ZZ, tuple(zr))
    rows = []
    for name, variety, formula, copies in ROWS:
        row = Table1Row(name, formula)
        if variety is None:
            G = bilinear_product_gp(abelian_presentation(zl), abelian_presentation(zr))
            row.result = list(G.invariant_factors)
            row.expected = _expected(zl, zr, ZZ, copies)
            rows.append(row)
            continue
        try:
            op = operad2.preset_operad(variety, R)
        except BadCharacteristic as exc:
            row.skipped = str(exc)
            rows.append(row)
            continue
        X, Y = operad2.abelian_algebra(op, ml), operad2.abelian_algebra(op, mr)
        row.result = _measure(operad2.bilinear2(X, Y).A)
        row.expected = _expected(zl if not R.is_field else [0] * a, zr if not R.is_field else [0] * b,
                                 R, copies)
        if R.is_field and variety in ("Comm", "Assoc", "Lie", "Leib"):
            sc = bilinear_product_sc(SCAlgebra.abelian(R, a, variety), SCAlgebra.abelian(R, b, variety))
            row.cross_check = sc.dim
        rows.append(row)
    return rows
