"""Exact linear algebra over ZZ, QQ and GF(p)."""
from .fgab import (
    Cokernel,
    FgAbGroup,
    direct_sum_fgab,
    exterior_square_fgab,
    fgab_from_presentation,
    map_cokernel,
    tensor_fgab,
)
from .linalg import QuotientSpace, Subspace, field_kernel, field_quotient, rank, rref
from .matrix import Matrix, block, block_diag, int_matrix
from .modules import Module
from .rings import GF, QQ, ZZ, FpElem, Ring, ring_from_name
from .snf import SnfResult, determinant, nullspace, smith_normal_form, solve

__all__ = [
    "Cokernel", "FgAbGroup", "direct_sum_fgab", "exterior_square_fgab", "fgab_from_presentation",
    "map_cokernel", "tensor_fgab", "QuotientSpace", "Subspace", "field_kernel", "field_quotient",
    "rank", "rref", "Matrix", "block", "block_diag", "int_matrix", "Module", "GF", "QQ", "ZZ",
    "FpElem", "Ring", "ring_from_name", "SnfResult", "determinant", "nullspace",
    "smith_normal_form", "solve",
]
