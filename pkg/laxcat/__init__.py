"""
laxcat: finite lax comma categories Cat//X.

Finite categories and their presentations, brute-force universal
property oracles, the lax comma category over a finite X with its
limits, colimits, Kan extensions and exponentials, and descent along
morphisms of X.

```python
from laxcat import FinCategory, LaxObject, product_laxcomma
```
"""

__version__ = "0.1.0"

from .core.exceptions import LaxcatError  # noqa: E402
from .core.settings import get_config  # noqa: E402
from .descent import classify_descent, descent_monad, slice_category  # noqa: E402
from .fincat import FinCategory, make_category  # noqa: E402
from .fincat.functor import Functor, NatTrans  # noqa: E402
from .laxcomma import L, R, LaxMorphism, LaxObject, U, compose_lax, enumerate_lax_hom  # noqa: E402
from .laxstruct import (  # noqa: E402
    coequalizer_laxcomma,
    coproduct_laxcomma,
    equalizer_laxcomma,
    exponential_laxcomma,
    initial_laxcomma,
    left_kan,
    product_laxcomma,
    pullback_laxcomma,
    terminal_laxcomma,
)
from .presentation import dumps, load_file, loads  # noqa: E402

__all__ = [
    "__version__",
    "LaxcatError",
    "get_config",
    # Finite categories
    "FinCategory",
    "make_category",
    "Functor",
    "NatTrans",
    "loads",
    "load_file",
    "dumps",
    # Cat//X
    "LaxObject",
    "LaxMorphism",
    "compose_lax",
    "enumerate_lax_hom",
    "U",
    "L",
    "R",
    # Constructions
    "terminal_laxcomma",
    "initial_laxcomma",
    "product_laxcomma",
    "coproduct_laxcomma",
    "pullback_laxcomma",
    "equalizer_laxcomma",
    "coequalizer_laxcomma",
    "exponential_laxcomma",
    "left_kan",
    # Descent
    "slice_category",
    "descent_monad",
    "classify_descent",
]
