"""
Limits, colimits, Kan extensions and exponentials in Cat//X, each
checkable against the universal-property oracle on a finite window.
"""

from .coequalizer import CatCoequalizer, cat_coequalizer, coequalizer_laxcomma
from .colimits import coproduct_family, coproduct_laxcomma, copair_lax, from_initial_lax, initial_laxcomma
from .construction import COLIMIT, LIMIT, Construction, canonical_probes
from .exponential import (
    LaxExponential,
    curry_lax,
    exponential_laxcomma,
    uncurry_lax,
    verify_currying,
    verify_currying_naturality,
)
from .kan import (
    Certificate,
    LanResult,
    MateCell,
    lan_adjunction,
    lan_counit,
    lan_map,
    left_kan,
    mate,
    opcartesian_lift,
)
from .limits import (
    equalizer_laxcomma,
    product_family_laxcomma,
    product_lax_map,
    product_laxcomma,
    product_pairing,
    pullback_laxcomma,
    terminal_laxcomma,
)

__all__ = [
    # Results
    "Construction",
    "LIMIT",
    "COLIMIT",
    "canonical_probes",
    # Limits
    "terminal_laxcomma",
    "product_laxcomma",
    "product_pairing",
    "product_lax_map",
    "product_family_laxcomma",
    "pullback_laxcomma",
    "equalizer_laxcomma",
    # Colimits
    "initial_laxcomma",
    "from_initial_lax",
    "coproduct_laxcomma",
    "copair_lax",
    "coproduct_family",
    "CatCoequalizer",
    "cat_coequalizer",
    "coequalizer_laxcomma",
    # Kan extensions
    "Certificate",
    "LanResult",
    "left_kan",
    "lan_map",
    "lan_counit",
    "lan_adjunction",
    "MateCell",
    "mate",
    "opcartesian_lift",
    # Exponentials
    "LaxExponential",
    "exponential_laxcomma",
    "curry_lax",
    "uncurry_lax",
    "verify_currying",
    "verify_currying_naturality",
]
