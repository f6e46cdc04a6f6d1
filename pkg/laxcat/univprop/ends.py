"""
Ends of bifunctors ``T: W^op × W -> C``.

:func:`end_of` computes the end as the equalizer of the two maps

    t0, t1: ∏_w T(w,w) -> ∏_{(w,y,h: w->y)} T(w,y)

whose components are ``T(id_w, h)∘π_w`` and ``T(h, id_y)∘π_y``.
:func:`find_end_by_wedges` searches universal wedges directly and is
used as an independent check.
"""

from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from laxcat.core.exceptions import MissingLimit, MissingProducts
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.functor import Functor
from laxcat.univprop.limits import equalizer, pairing, product_of

logger = get_logger(__name__)


class End(NamedTuple):
    """The end apex with its projections ``π_w: apex -> T(w,w)``."""

    apex: str
    projections: Dict[str, str]


class Twisted(NamedTuple):
    """What an end needs to know about W, read off the source of T."""

    objects: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str, str], ...]  # (w, y, h) in canonical order
    identities: Dict[str, str]


def twisted_shape(t: Functor, w: Optional[FinCategory] = None) -> Twisted:
    """
    Recover W from ``t.source = W^op × W``.

    With ``w`` given it is used directly; otherwise the pair tags of the
    product category are read.
    """
    if w is not None:
        arrows = tuple(
            (x, y, h) for x in w.objects for y in w.objects for h in w.hom(x, y)
        )
        return Twisted(w.objects, arrows, w.identities)

    square = t.source
    objects: List[str] = []
    for x in square.objects:
        tag = square.object_tag(x)
        if tag is None:
            raise MissingLimit(f"end over untagged {square.name}")
        if tag[1] not in objects:
            objects.append(tag[1])
    identities: Dict[str, str] = {}
    for x in objects:
        identities[x] = square.morphism_tag(square.identity(square.tagged_object((x, x))))[1]
    arrows = []
    seen = set()
    for m in square.morphisms:
        u, h = square.morphism_tag(m)
        if u != identities[square.object_tag(square.dom(m))[0]] or h in seen:
            continue
        seen.add(h)
        dom = square.object_tag(square.dom(m))[1]
        cod = square.object_tag(square.cod(m))[1]
        arrows.append((dom, cod, h))
    position = {x: i for i, x in enumerate(objects)}
    order = {h: i for i, h in enumerate(a[2] for a in arrows)}
    arrows.sort(key=lambda a: (position[a[0]], position[a[1]], order[a[2]]))
    return Twisted(tuple(objects), tuple(arrows), identities)


def _value(t: Functor, x: str, y: str) -> str:
    return t.omap[t.source.tagged_object((x, y))]


def _action(t: Functor, u: str, h: str) -> str:
    return t.mmap[t.source.tagged_morphism((u, h))]


def end_of(t: Functor, w: Optional[FinCategory] = None) -> End:
    """
    The end of ``t`` as an equalizer of maps between products.

    Raises:
        MissingProducts: when one of the two products is missing
        MissingLimit: when the equalizer is missing
    """
    c = t.target
    shape = twisted_shape(t, w)

    diagonal = [_value(t, x, x) for x in shape.objects]
    p0 = product_of(c, diagonal)
    if p0 is None:
        raise MissingProducts("prod_w T(w,w)")
    pi = dict(zip(shape.objects, p0.projections))

    p1 = product_of(c, [_value(t, x, y) for x, y, _ in shape.arrows])
    if p1 is None:
        raise MissingProducts("prod_(w,y,h) T(w,y)")

    left = [c.compose(_action(t, shape.identities[x], h), pi[x]) for x, y, h in shape.arrows]
    right = [c.compose(_action(t, h, shape.identities[y]), pi[y]) for x, y, h in shape.arrows]
    t0 = pairing(c, p1, left, p0.apex)
    t1 = pairing(c, p1, right, p0.apex)

    eq = equalizer(c, t0, t1)
    if eq is None:
        raise MissingLimit(f"equalizer({t0},{t1})")
    logger.debug(f"End of {t.name} is {eq.apex}")
    return End(eq.apex, {x: c.compose(pi[x], eq.map) for x in shape.objects})


# ============================================================================
# WEDGES
# ============================================================================


def iter_wedges(t: Functor, apex: str, shape: Twisted) -> Iterator[Dict[str, str]]:
    """Families ``ω_w: apex -> T(w,w)`` with ``T(id,h)∘ω_w = T(h,id)∘ω_y``."""
    c = t.target
    position = {x: i for i, x in enumerate(shape.objects)}
    checks: Dict[int, List[Tuple[str, str, str]]] = {}
    for x, y, h in shape.arrows:
        checks.setdefault(max(position[x], position[y]), []).append((x, y, h))
    chosen: Dict[str, str] = {}

    def extend(i: int) -> Iterator[Dict[str, str]]:
        if i == len(shape.objects):
            yield dict(chosen)
            return
        x = shape.objects[i]
        for leg in c.hom(apex, _value(t, x, x)):
            chosen[x] = leg
            if all(
                c.compose(_action(t, shape.identities[a], h), chosen[a])
                == c.compose(_action(t, h, shape.identities[b]), chosen[b])
                for a, b, h in checks.get(i, ())
            ):
                yield from extend(i + 1)
        chosen.pop(x, None)

    yield from extend(0)


def find_end_by_wedges(t: Functor, w: Optional[FinCategory] = None) -> Optional[End]:
    """The universal wedge with the canonically least apex, or None."""
    c = t.target
    shape = twisted_shape(t, w)
    for apex in c.objects:
        for omega in iter_wedges(t, apex, shape):
            if _universal(t, shape, apex, omega):
                return End(apex, omega)
    return None


def _universal(t: Functor, shape: Twisted, apex: str, omega: Dict[str, str]) -> bool:
    c = t.target
    for test in c.objects:
        induced = set()
        for m in c.hom(test, apex):
            induced.add(tuple(c.compose(omega[x], m) for x in shape.objects))
        if len(induced) != len(c.hom(test, apex)):
            return False
        wedges = {tuple(o[x] for x in shape.objects) for o in iter_wedges(t, test, shape)}
        if wedges != induced:
            return False
    return True
