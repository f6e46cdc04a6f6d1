"""
Property checks, reports and the ``laxcat`` command line.

Importing this package registers every construction and check handler.
"""

from . import commands  # noqa: F401
from .checks import (
    Check,
    check_adjunctions,
    check_descent,
    check_extensivity,
    check_l_pullback_zero,
    check_lattice,
    check_lu_pullback,
    check_strict_initial,
    check_topologicity,
    run_batch,
)
from .cli import main
from .io import dump_lax_morphism, dump_lax_object, load_lax_morphism, load_lax_object, load_workspace
from .lifts import InitialLift, initial_lift, lift_failure
from .report import CheckReport, combined_exit_code, render_reports

__all__ = [
    # Reports
    "CheckReport",
    "combined_exit_code",
    "render_reports",
    # Checks
    "Check",
    "run_batch",
    "check_lattice",
    "check_strict_initial",
    "check_topologicity",
    "check_adjunctions",
    "check_descent",
    "check_extensivity",
    "check_lu_pullback",
    "check_l_pullback_zero",
    # Lifts
    "InitialLift",
    "initial_lift",
    "lift_failure",
    # Files
    "load_workspace",
    "load_lax_object",
    "load_lax_morphism",
    "dump_lax_object",
    "dump_lax_morphism",
    # CLI
    "main",
]
