"""
Finite categories, functors and natural transformations.

Provides the data model with exhaustive validation, canonical
enumeration, and the standard constructions used by every other
subpackage.
"""

from .category import (
    FinCategory,
    categories_equal_up_to_order,
    check_category_laws,
    check_size,
    composable_pairs,
    make_category,
    validate_category,
)
from .constructions import (
    CatPullback,
    Comma,
    comma_over,
    copair_functors,
    coproduct_category,
    coproduct_injections,
    equalizer_category,
    functor_category,
    opposite,
    opposite_functor,
    pair_functors,
    product_category,
    product_projections,
    pullback_category,
)
from .enumerate import enumerate_functors, enumerate_nat_trans, guarded, iter_functors, iter_nat_trans
from .functor import (
    Functor,
    NatTrans,
    check_parallel,
    compose_functors,
    constant_functor,
    identity_functor,
    identity_nat_trans,
    validate_functor,
    validate_nat_trans,
    vertical_compose,
    whisker_left,
    whisker_right,
)
from .properties import (
    are_isomorphic,
    find_equivalence,
    find_isomorphism,
    is_equivalence,
    is_essentially_surjective,
    is_faithful,
    is_full,
    is_fully_faithful,
)
from .standard import (
    arrow_category,
    chain_category,
    cospan_category,
    discrete_category,
    empty_category,
    free_category,
    parallel_pair,
    poset_category,
    span_category,
    terminal_category,
)

__all__ = [
    # Data model
    "FinCategory",
    "Functor",
    "NatTrans",
    "make_category",
    "validate_category",
    "check_category_laws",
    "check_size",
    "validate_functor",
    "validate_nat_trans",
    "check_parallel",
    "categories_equal_up_to_order",
    "composable_pairs",
    # Enumeration
    "enumerate_functors",
    "enumerate_nat_trans",
    "iter_functors",
    "iter_nat_trans",
    "guarded",
    # Algebra
    "identity_functor",
    "constant_functor",
    "compose_functors",
    "identity_nat_trans",
    "vertical_compose",
    "whisker_left",
    "whisker_right",
    # Constructions
    "opposite",
    "opposite_functor",
    "product_category",
    "product_projections",
    "pair_functors",
    "coproduct_category",
    "coproduct_injections",
    "copair_functors",
    "functor_category",
    "Comma",
    "comma_over",
    "CatPullback",
    "pullback_category",
    "equalizer_category",
    # Properties
    "is_faithful",
    "is_full",
    "is_fully_faithful",
    "is_essentially_surjective",
    "is_equivalence",
    "find_isomorphism",
    "find_equivalence",
    "are_isomorphic",
    # Standard shapes
    "terminal_category",
    "empty_category",
    "arrow_category",
    "discrete_category",
    "parallel_pair",
    "cospan_category",
    "span_category",
    "poset_category",
    "chain_category",
    "free_category",
]
