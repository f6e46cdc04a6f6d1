"""
Brute-force universal-property oracles for finite categories.

Every construction elsewhere in laxcat is checked against these.
"""

from .checks import (
    complete_lattice_check,
    join,
    lattice_defect,
    lower_bounds,
    meet,
    strict_initial_check,
    upper_bounds,
)
from .diagram import (
    Cocone,
    Cone,
    Diagram,
    all_limit_apexes,
    cone_failure,
    find_colimit,
    find_limit,
    is_colimit,
    is_limit,
    iter_cones,
    limit_failure,
    mediate,
    mediate_colimit,
)
from .ends import End, end_of, find_end_by_wedges, twisted_shape
from .exponential import Exponential, curry, exponential_map, find_exponential, require_exponential
from .limits import (
    Coequalizer,
    Equalizer,
    FamilyProduct,
    Product,
    Pullback,
    binary_coproduct,
    binary_product,
    coequalizer,
    coequalizer_mediator,
    equalizer,
    from_initial,
    initial_object,
    is_isomorphic_objects,
    pairing,
    product_map,
    product_of,
    pullback,
    pullback_mediator,
    require_product,
    swap,
    terminal_object,
    to_terminal,
)

__all__ = [
    # Diagrams and the oracle
    "Diagram",
    "Cone",
    "Cocone",
    "cone_failure",
    "iter_cones",
    "is_limit",
    "is_colimit",
    "limit_failure",
    "find_limit",
    "find_colimit",
    "all_limit_apexes",
    "mediate",
    "mediate_colimit",
    # Named limits
    "Product",
    "FamilyProduct",
    "Equalizer",
    "Pullback",
    "Coequalizer",
    "terminal_object",
    "initial_object",
    "to_terminal",
    "from_initial",
    "is_isomorphic_objects",
    "binary_product",
    "require_product",
    "product_of",
    "pairing",
    "product_map",
    "swap",
    "equalizer",
    "pullback",
    "pullback_mediator",
    "coequalizer",
    "coequalizer_mediator",
    "binary_coproduct",
    # Exponentials
    "Exponential",
    "find_exponential",
    "require_exponential",
    "curry",
    "exponential_map",
    # Ends
    "End",
    "end_of",
    "find_end_by_wedges",
    "twisted_shape",
    # Order and strictness
    "strict_initial_check",
    "complete_lattice_check",
    "lattice_defect",
    "meet",
    "join",
    "lower_bounds",
    "upper_bounds",
]
