"""
Diagrams, cones and the brute-force limit oracle.

A cone over ``D: J -> C`` with apex ``c`` is a natural transformation
from the constant functor at ``c`` to ``D``; cones are enumerated as such.
``is_limit`` checks that every cone factors uniquely through the
candidate, over every object of C. Colimits are limits in the opposite
category, which has the same names.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from laxcat.core.exceptions import NotACone
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.constructions import opposite, opposite_functor
from laxcat.fincat.enumerate import iter_nat_trans
from laxcat.fincat.functor import Functor, constant_functor
from laxcat.fincat.standard import cospan_category, discrete_category, empty_category, parallel_pair

logger = get_logger(__name__)


@dataclass(frozen=True)
class Diagram:
    """A functor ``shape -> category`` viewed as a diagram."""

    shape: FinCategory
    functor: Functor

    def __post_init__(self):
        if self.functor.source != self.shape:
            raise ValueError("diagram functor must start at its shape")

    @property
    def category(self) -> FinCategory:
        return self.functor.target

    @classmethod
    def of(cls, functor: Functor) -> "Diagram":
        return cls(functor.source, functor)

    @classmethod
    def empty(cls, c: FinCategory) -> "Diagram":
        shape = empty_category()
        return cls(shape, Functor(shape, c, {}, {}, name="D"))

    @classmethod
    def discrete(cls, c: FinCategory, objects: Sequence[str]) -> "Diagram":
        """Family ``objects[0], objects[1], ...`` indexed by ``"0", "1", ...``."""
        index = [str(i) for i in range(len(objects))]
        shape = discrete_category(index, name=f"Disc{len(index)}")
        omap = dict(zip(index, objects))
        mmap = {shape.identity(i): c.identity(omap[i]) for i in index}
        return cls(shape, Functor(shape, c, omap, mmap, name="D"))

    @classmethod
    def parallel(cls, c: FinCategory, f: str, g: str) -> "Diagram":
        shape = parallel_pair()
        d, e = c.dom(f), c.cod(f)
        omap = {"0": d, "1": e}
        mmap = {"id_0": c.identity(d), "id_1": c.identity(e), "u": f, "v": g}
        return cls(shape, Functor(shape, c, omap, mmap, name="D"))

    @classmethod
    def cospan(cls, c: FinCategory, f: str, g: str) -> "Diagram":
        shape = cospan_category()
        omap = {"0": c.dom(f), "1": c.dom(g), "2": c.cod(f)}
        mmap = {shape.identity(j): c.identity(omap[j]) for j in shape.objects}
        mmap.update({"l": f, "r": g})
        return cls(shape, Functor(shape, c, omap, mmap, name="D"))

    def opposite(self) -> "Diagram":
        return Diagram(opposite(self.shape), opposite_functor(self.functor))


@dataclass(frozen=True)
class Cone:
    """Apex plus legs ``apex -> D(j)``, one per shape object."""

    apex: str
    legs: Dict[str, str] = field(default_factory=dict)

    def __getitem__(self, j: str) -> str:
        return self.legs[j]


@dataclass(frozen=True)
class Cocone:
    """Apex plus legs ``D(j) -> apex``, one per shape object."""

    apex: str
    legs: Dict[str, str] = field(default_factory=dict)

    def __getitem__(self, j: str) -> str:
        return self.legs[j]


def cone_failure(d: Diagram, apex: str, legs: Mapping[str, str]) -> Optional[str]:
    """First shape object or morphism at which ``legs`` is not a cone, or None."""
    c, functor = d.category, d.functor
    for j in d.shape.objects:
        leg = legs.get(j)
        if leg is None or not c.has_morphism(leg):
            return j
        if c.dom(leg) != apex or c.cod(leg) != functor.omap[j]:
            return j
    for u in d.shape.morphisms:
        j, k = d.shape.dom(u), d.shape.cod(u)
        if c.compose(functor.mmap[u], legs[j]) != legs[k]:
            return u
    return None


def iter_cones(d: Diagram, apex: str) -> Iterator[Cone]:
    """All cones with the given apex, in canonical order."""
    const = constant_functor(d.shape, d.category, apex)
    for alpha in iter_nat_trans(const, d.functor):
        yield Cone(apex, alpha.components)


def _legs_key(d: Diagram, legs: Mapping[str, str]) -> Tuple[str, ...]:
    return tuple(legs[j] for j in d.shape.objects)


def limit_failure(d: Diagram, cone: Cone) -> Optional[Tuple[str, str]]:
    """
    Test the universal property of a cone.

    Returns:
        None when the cone is a limit, otherwise ``(object, reason)`` for
        the first test object at which factorization fails

    Raises:
        NotACone: if ``cone`` does not commute with the diagram
    """
    bad = cone_failure(d, cone.apex, cone.legs)
    if bad is not None:
        raise NotACone(cone.apex, bad)
    c = d.category
    for test in c.objects:
        factored: Dict[Tuple[str, ...], str] = {}
        for m in c.hom(test, cone.apex):
            key = tuple(c.compose(cone.legs[j], m) for j in d.shape.objects)
            if key in factored:
                return test, f"'{factored[key]}' and '{m}' induce the same cone"
            factored[key] = m
        for other in iter_cones(d, test):
            if _legs_key(d, other.legs) not in factored:
                return test, "a cone does not factor"
    return None


def is_limit(d: Diagram, cone: Cone) -> bool:
    """True iff every cone factors through ``cone`` exactly once."""
    return limit_failure(d, cone) is None


def is_colimit(d: Diagram, cocone: Cocone) -> bool:
    """Dual of :func:`is_limit`, checked in the opposite category."""
    bad = cone_failure(d.opposite(), cocone.apex, cocone.legs)
    if bad is not None:
        raise NotACone(cocone.apex, bad, dual=True)
    return is_limit(d.opposite(), Cone(cocone.apex, cocone.legs))


@lru_cache(maxsize=4096)
def find_limit(d: Diagram) -> Optional[Cone]:
    """
    The limit cone with the canonically least apex (then least legs).

    Returns:
        The cone, or None when no object of the category carries a limit
    """
    for apex in d.category.objects:
        for cone in iter_cones(d, apex):
            if is_limit(d, cone):
                logger.debug(f"Limit of {d.functor.name} over {d.shape.name}: apex {apex}")
                return cone
    return None


def find_colimit(d: Diagram) -> Optional[Cocone]:
    """The colimit, computed as a limit of the opposite diagram."""
    cone = find_limit(d.opposite())
    if cone is None:
        return None
    return Cocone(cone.apex, dict(cone.legs))


def all_limit_apexes(d: Diagram) -> List[str]:
    """Every object that carries some limit cone (exhaustive)."""
    return [
        apex
        for apex in d.category.objects
        if any(is_limit(d, cone) for cone in iter_cones(d, apex))
    ]


# ============================================================================
# MEDIATING MORPHISMS
# ============================================================================


def mediate(d: Diagram, limit: Cone, other: Cone) -> Optional[str]:
    """
    The morphism ``other.apex -> limit.apex`` commuting with the legs.

    Raises:
        NotACone: if ``other`` is not a cone over d
    """
    bad = cone_failure(d, other.apex, other.legs)
    if bad is not None:
        raise NotACone(other.apex, bad)
    c = d.category
    target = _legs_key(d, other.legs)
    for m in c.hom(other.apex, limit.apex):
        if tuple(c.compose(limit.legs[j], m) for j in d.shape.objects) == target:
            return m
    return None


def mediate_colimit(d: Diagram, colimit: Cocone, other: Cocone) -> Optional[str]:
    """The morphism ``colimit.apex -> other.apex`` commuting with the legs."""
    return mediate(d.opposite(), Cone(colimit.apex, colimit.legs), Cone(other.apex, other.legs))
