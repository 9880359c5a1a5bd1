"""Lie, Leibniz, associative and commutative algebras by structure constants."""
from .algebra import (
    IdentityReport,
    SCAlgebra,
    center,
    check_identity,
    ideal_closure,
    is_ideal,
    is_subalgebra,
    mixed_product,
    product_space,
    subalgebra_closure,
)
from .bilinear import BilinearProduct, as_nil2_algebra, bilinear_product_sc
from .commutators import (
    LowerCentralSeries,
    higgins_commutator,
    j_filtration,
    left_normed_chain,
    lower_central_series,
    ternary_commutator,
)
from .extensions import ExtensionReport, abelian_extension_analysis
from .quotients import (
    CommutationReport,
    QuotientAlgebra,
    birkhoff_reflect,
    commute_nil_birkhoff_test,
    nilpotentisation,
    quotient_algebra,
)
from .reps import LieRep, adjoint_rep, rep_tensor_lie, sl2, sl2_standard_rep, trivial_rep

__all__ = [
    "IdentityReport", "SCAlgebra", "center", "check_identity", "ideal_closure", "is_ideal",
    "is_subalgebra", "mixed_product", "product_space", "subalgebra_closure", "BilinearProduct",
    "as_nil2_algebra", "bilinear_product_sc", "LowerCentralSeries", "higgins_commutator",
    "j_filtration", "left_normed_chain", "lower_central_series", "ternary_commutator",
    "ExtensionReport", "abelian_extension_analysis", "CommutationReport", "QuotientAlgebra",
    "birkhoff_reflect", "commute_nil_birkhoff_test", "nilpotentisation", "quotient_algebra",
    "LieRep", "adjoint_rep", "rep_tensor_lie", "sl2", "sl2_standard_rep", "trivial_rep",
]
