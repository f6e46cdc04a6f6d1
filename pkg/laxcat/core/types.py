"""
Type definitions for laxcat.

This module provides:
- Enums for presentation kinds, check verdicts, descent grades and registry kinds
"""

from enum import Enum
from typing import List

# ============================================================================
# ENUMS
# ============================================================================


class DocKind(str, Enum):
    """Kinds of `.fcat` documents."""

    CATEGORY = "category"
    POSET = "poset"
    FREEACYCLIC = "freeacyclic"
    FUNCTOR = "functor"
    NATTRANS = "nattrans"

    @classmethod
    def keywords(cls) -> List[str]:
        return [kind.value for kind in cls]


class Verdict(str, Enum):
    """Outcome of a property check."""

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"

    @property
    def exit_code(self) -> int:
        """Process exit code for this verdict."""
        return {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.SKIPPED: 2}[self]


class DescentClass(str, Enum):
    """Grades of descent, ordered from weakest to strongest.

    Grades are cumulative: effective descent implies descent, which
    implies almost descent.
    """

    NOT_ALMOST = "not-almost"
    ALMOST_DESCENT = "almost-descent"
    DESCENT = "descent"
    EFFECTIVE_DESCENT = "effective-descent"

    @property
    def rank(self) -> int:
        return list(DescentClass).index(self)

    def at_least(self, other: "DescentClass") -> bool:
        return self.rank >= other.rank


class RegistryKind(str, Enum):
    """Kinds of entries held by the construction registry."""

    CONSTRUCTION = "construction"
    CHECK = "check"
