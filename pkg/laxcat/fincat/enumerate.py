"""
Exhaustive enumeration of functors and natural transformations.

Both enumerators are depth-first searches over candidates in declaration
order, so their output is already in canonical (lexicographic) order.
A constraint is checked as soon as every morphism it mentions has been
assigned.
"""

from typing import Dict, Iterator, List, Tuple

from laxcat.core.exceptions import SizeLimitExceeded
from laxcat.core.settings import get_limits
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.functor import Functor, NatTrans, check_parallel

logger = get_logger(__name__)


def guarded(items: Iterator, what: str) -> List:
    """Materialize an enumeration, refusing to go past the configured limit."""
    limit = get_limits().enumeration_limit
    result = []
    for item in items:
        result.append(item)
        if len(result) > limit:
            raise SizeLimitExceeded(what, len(result), limit, "LAXCAT_ENUMERATION_LIMIT")
    return result


def _composition_constraints(w: FinCategory) -> Tuple[List[str], Dict[int, List[Tuple[str, str, str]]]]:
    """Group the table of w by the last non-identity morphism it mentions."""
    free = list(w.non_identities())
    position = {f: i for i, f in enumerate(free)}
    by_step: Dict[int, List[Tuple[str, str, str]]] = {}
    for (g, f), h in w.table.items():
        involved = [position[m] for m in (g, f, h) if m in position]
        if not involved:
            continue
        by_step.setdefault(max(involved), []).append((g, f, h))
    return free, by_step


def iter_functors(w: FinCategory, y: FinCategory) -> Iterator[Functor]:
    """Lazily yield every functor ``w -> y`` in canonical order."""
    free, by_step = _composition_constraints(w)

    def assignments(omap: Dict[str, str]) -> Iterator[Dict[str, str]]:
        mmap = {w.identity(x): y.identity(omap[x]) for x in w.objects}

        def extend(i: int) -> Iterator[Dict[str, str]]:
            if i == len(free):
                yield dict(mmap)
                return
            f = free[i]
            for candidate in y.hom(omap[w.dom(f)], omap[w.cod(f)]):
                mmap[f] = candidate
                if all(
                    mmap[h] == y.compose(mmap[g], mmap[ff])
                    for g, ff, h in by_step.get(i, ())
                ):
                    yield from extend(i + 1)
            mmap.pop(f, None)

        yield from extend(0)

    objects = list(w.objects)

    def object_maps(i: int, omap: Dict[str, str]) -> Iterator[Dict[str, str]]:
        if i == len(objects):
            yield dict(omap)
            return
        for target in y.objects:
            omap[objects[i]] = target
            yield from object_maps(i + 1, omap)
        omap.pop(objects[i], None)

    for omap in object_maps(0, {}):
        for mmap in assignments(omap):
            yield Functor(w, y, omap, mmap, name="F")


def enumerate_functors(w: FinCategory, y: FinCategory) -> List[Functor]:
    """
    All functors ``w -> y``.

    Returns:
        The complete, duplicate-free list, lexicographic on the object map
        then on the morphism map, by declaration order.

    Raises:
        SizeLimitExceeded: when more than the configured enumeration
            limit would be produced
    """
    result = guarded(iter_functors(w, y), f"functors {w.name} -> {y.name}")
    logger.debug(f"{len(result)} functors {w.name} -> {y.name}")
    return result


def iter_nat_trans(f: Functor, g: Functor) -> Iterator[NatTrans]:
    check_parallel(f, g)
    w, x = f.source, f.target
    objects = list(w.objects)
    position = {obj: i for i, obj in enumerate(objects)}
    squares: Dict[int, List[str]] = {}
    for h in w.morphisms:
        step = max(position[w.dom(h)], position[w.cod(h)])
        squares.setdefault(step, []).append(h)

    components: Dict[str, str] = {}

    def extend(i: int) -> Iterator[NatTrans]:
        if i == len(objects):
            yield NatTrans(f, g, components, name="alpha")
            return
        obj = objects[i]
        for candidate in x.hom(f.omap[obj], g.omap[obj]):
            components[obj] = candidate
            if all(
                x.compose(g.mmap[h], components[w.dom(h)])
                == x.compose(components[w.cod(h)], f.mmap[h])
                for h in squares.get(i, ())
            ):
                yield from extend(i + 1)
        components.pop(obj, None)

    yield from extend(0)


def enumerate_nat_trans(f: Functor, g: Functor) -> List[NatTrans]:
    """
    All natural transformations ``f => g`` in canonical order.

    Raises:
        NotParallel: if f and g are not parallel
    """
    return guarded(iter_nat_trans(f, g), f"transformations {f.name} => {g.name}")
