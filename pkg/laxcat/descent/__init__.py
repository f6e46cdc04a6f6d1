"""
Descent along morphisms of finite categories, with instance checks of
the transfer results for Cat//X.
"""

from .classify import (
    DescentReport,
    classify_descent,
    grade_of,
    is_regular_epi,
    preserves_pullbacks_of,
    pullback_stability,
    reflects_almost_descent,
    reflects_descent,
)
from .monad import (
    DescentMonad,
    EilenbergMoore,
    EMAlgebra,
    comparison_functor,
    descent_monad,
    eilenberg_moore,
    is_algebra,
)
from .slice import BaseChange, SliceCategory, change_of_base, slice_category, sum_functor
from .verify import lu_comparison, obstruction_check, verify_L_pullback_zero, verify_LU_pullback

__all__ = [
    # Slices
    "SliceCategory",
    "slice_category",
    "BaseChange",
    "change_of_base",
    "sum_functor",
    # Monad
    "DescentMonad",
    "descent_monad",
    "EMAlgebra",
    "EilenbergMoore",
    "eilenberg_moore",
    "is_algebra",
    "comparison_functor",
    # Classification
    "DescentReport",
    "grade_of",
    "classify_descent",
    "is_regular_epi",
    "pullback_stability",
    "preserves_pullbacks_of",
    "reflects_almost_descent",
    "reflects_descent",
    # Instance checks
    "obstruction_check",
    "verify_L_pullback_zero",
    "verify_LU_pullback",
    "lu_comparison",
]
