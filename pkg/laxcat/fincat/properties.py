"""Exhaustive property checks on functors and categories."""

from collections import Counter
from typing import Optional, Tuple

from laxcat.fincat.category import FinCategory
from laxcat.fincat.enumerate import iter_functors
from laxcat.fincat.functor import Functor


def _hom_images(functor: Functor, x: str, y: str) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    source_hom = functor.source.hom(x, y)
    return tuple(functor.mmap[f] for f in source_hom), functor.target.hom(
        functor.omap[x], functor.omap[y]
    )


def is_faithful(functor: Functor) -> bool:
    """Injective on every hom-set."""
    objects = functor.source.objects
    for x in objects:
        for y in objects:
            images, _ = _hom_images(functor, x, y)
            if len(set(images)) != len(images):
                return False
    return True


def is_full(functor: Functor) -> bool:
    """Surjective on every hom-set."""
    objects = functor.source.objects
    for x in objects:
        for y in objects:
            images, hom = _hom_images(functor, x, y)
            if set(images) != set(hom):
                return False
    return True


def is_fully_faithful(functor: Functor) -> bool:
    return is_faithful(functor) and is_full(functor)


def is_essentially_surjective(functor: Functor) -> bool:
    """Every target object is isomorphic to an image object."""
    t = functor.target
    images = set(functor.omap.values())
    for y in t.objects:
        if y in images:
            continue
        if not any(t.isomorphisms(x, y) for x in images):
            return False
    return True


def is_equivalence(functor: Functor) -> bool:
    return is_fully_faithful(functor) and is_essentially_surjective(functor)


def non_faithful_witness(functor: Functor) -> Optional[Tuple[str, str]]:
    """Two distinct parallel morphisms identified by the functor, if any."""
    c = functor.source
    for x in c.objects:
        for y in c.objects:
            seen = {}
            for f in c.hom(x, y):
                g = functor.mmap[f]
                if g in seen:
                    return seen[g], f
                seen[g] = f
    return None


# ============================================================================
# ISOMORPHISM OF CATEGORIES
# ============================================================================


def _signature(category: FinCategory) -> Counter:
    counts = category.hom_counts()
    return Counter(int(v) for v in counts.to_numpy().ravel())


def find_isomorphism(c: FinCategory, d: FinCategory) -> Optional[Functor]:
    """
    Search for an isomorphism of categories ``c -> d``.

    Returns:
        The canonically first functor that is bijective on objects and
        morphisms, or None
    """
    if c.size != d.size:
        return None
    if c.objects and _signature(c) != _signature(d):
        return None
    for functor in iter_functors(c, d):
        if len(set(functor.omap.values())) != len(c.objects):
            continue
        if len(set(functor.mmap.values())) == len(c.morphisms):
            return functor
    return None


def are_isomorphic(c: FinCategory, d: FinCategory) -> bool:
    return find_isomorphism(c, d) is not None


def find_equivalence(c: FinCategory, d: FinCategory) -> Optional[Functor]:
    """The canonically first equivalence ``c -> d``, or None."""
    for functor in iter_functors(c, d):
        if is_equivalence(functor):
            return functor
    return None
