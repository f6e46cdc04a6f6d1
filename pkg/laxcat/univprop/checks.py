"""Strict initial objects and complete lattices."""

from typing import Optional, Sequence, Tuple

from laxcat.fincat.category import FinCategory
from laxcat.univprop.limits import initial_object


def strict_initial_check(c: FinCategory) -> bool:
    """True iff an initial object exists and every morphism into it is iso."""
    zero = initial_object(c)
    if zero is None:
        return False
    return all(c.is_iso(f) for x in c.objects for f in c.hom(x, zero))


# ============================================================================
# ORDER-THEORETIC VIEW OF THIN CATEGORIES
# ============================================================================


def lower_bounds(c: FinCategory, elements: Sequence[str]) -> Tuple[str, ...]:
    return tuple(z for z in c.objects if all(c.leq(z, e) for e in elements))


def upper_bounds(c: FinCategory, elements: Sequence[str]) -> Tuple[str, ...]:
    return tuple(z for z in c.objects if all(c.leq(e, z) for e in elements))


def meet(c: FinCategory, elements: Sequence[str]) -> Optional[str]:
    """Greatest lower bound in the preorder reading of c, or None."""
    bounds = lower_bounds(c, elements)
    for z in bounds:
        if all(c.leq(b, z) for b in bounds):
            return z
    return None


def join(c: FinCategory, elements: Sequence[str]) -> Optional[str]:
    bounds = upper_bounds(c, elements)
    for z in bounds:
        if all(c.leq(z, b) for b in bounds):
            return z
    return None


def lattice_defect(c: FinCategory) -> Optional[Tuple[str, Tuple[str, ...]]]:
    """
    Why c is not a complete lattice.

    Returns:
        None for a complete lattice, otherwise ``(reason, witness)``
        where the witness is the offending family: ``()`` for a missing
        top or bottom, a pair otherwise
    """
    for x in c.objects:
        for y in c.objects:
            if len(c.hom(x, y)) > 1:
                return "not thin", (x, y)
    for x in c.objects:
        for y in c.objects:
            if x != y and c.leq(x, y) and c.leq(y, x):
                return "not antisymmetric", (x, y)
    if meet(c, ()) is None:
        return "no top", ()
    if join(c, ()) is None:
        return "no bottom", ()
    for i, x in enumerate(c.objects):
        for y in c.objects[i + 1 :]:
            if meet(c, (x, y)) is None:
                return "no meet", (x, y)
            if join(c, (x, y)) is None:
                return "no join", (x, y)
    return None


def complete_lattice_check(c: FinCategory) -> bool:
    """Thin, skeletal, with top, bottom and binary meets and joins."""
    return lattice_defect(c) is None
