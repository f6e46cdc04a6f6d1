"""
The lax comma category Cat//X: objects, morphisms, 2-cells, finite
windows, the fibration U and its adjoints L and R.
"""

from .adjunction import (
    L,
    R,
    Adjunction,
    find_lax_isomorphism,
    iota,
    l_adjunction,
    l_preserves_terminal,
    lax_isomorphic,
    r_adjunction,
    tau,
    verify_adjunction,
    verify_triangle_identities,
)
from .fibration import cartesian_lift, factorization_failure, is_cartesian, restrict, vertical_factorization
from .objects import (
    LaxMorphism,
    LaxObject,
    LaxTwoCell,
    U,
    compose_lax,
    enumerate_lax_hom,
    enumerate_two_cells,
    identity_lax,
    is_strict,
    iter_lax_hom,
    lax_morphism,
    lax_object,
    strict_morphism,
    two_cell_check,
)
from .truncation import Truncation, strict_subcategory

__all__ = [
    # Values
    "LaxObject",
    "LaxMorphism",
    "LaxTwoCell",
    "lax_object",
    "lax_morphism",
    "strict_morphism",
    # Category structure
    "identity_lax",
    "compose_lax",
    "is_strict",
    "iter_lax_hom",
    "enumerate_lax_hom",
    "two_cell_check",
    "enumerate_two_cells",
    # Windows
    "Truncation",
    "strict_subcategory",
    # Fibration
    "U",
    "restrict",
    "cartesian_lift",
    "vertical_factorization",
    "is_cartesian",
    "factorization_failure",
    # Adjoints
    "L",
    "R",
    "iota",
    "tau",
    "l_preserves_terminal",
    "Adjunction",
    "verify_adjunction",
    "verify_triangle_identities",
    "l_adjunction",
    "r_adjunction",
    "find_lax_isomorphism",
    "lax_isomorphic",
]
