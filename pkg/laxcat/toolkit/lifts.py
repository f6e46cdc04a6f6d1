"""
Initial lifts of structured sources along ``U: Cat//X -> Cat``.

A source over a category W is a family of functors ``f_i: W -> Y_i``
with lax objects ``(Y_i, b_i)``. Its initial lift puts on W the
pointwise product of the ``b_i(f_i w)`` and lifts each ``f_i`` with the
product projections.
"""

from dataclasses import dataclass
from itertools import product as cartesian
from typing import List, Sequence, Tuple

from laxcat.core.exceptions import MissingLimit, MissingProducts
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.enumerate import enumerate_functors
from laxcat.fincat.functor import Functor, compose_functors
from laxcat.laxcomma.objects import LaxMorphism, LaxObject, compose_lax, enumerate_lax_hom, lax_morphism
from laxcat.univprop.limits import pairing, product_of

logger = get_logger(__name__)

Source = Tuple[Functor, LaxObject]


@dataclass(frozen=True)
class InitialLift:
    """The lifted object ``(W, a)`` and one lax morphism per source."""

    apex: LaxObject
    lifts: Tuple[LaxMorphism, ...]


def initial_lift(w: FinCategory, x: FinCategory, sources: Sequence[Source]) -> InitialLift:
    """
    Lift a structured source.

    Raises:
        MissingLimit: if a pointwise product is missing; for the empty
            family this means X has no terminal object
    """
    omap, products = {}, {}
    for v in w.objects:
        factors = [b.at(f.omap[v]) for f, b in sources]
        found = product_of(x, factors)
        if found is None:
            raise MissingProducts(f"prod({','.join(factors)})") if factors else MissingLimit("terminal")
        products[v] = found
        omap[v] = found.apex
    mmap = {}
    for u in w.morphisms:
        dom, cod = w.dom(u), w.cod(u)
        legs = [
            x.compose(b.structure.mmap[f.mmap[u]], p)
            for (f, b), p in zip(sources, products[dom].projections)
        ]
        mmap[u] = pairing(x, products[cod], legs, omap[dom])
    apex = LaxObject(w, Functor(w, x, omap, mmap, name="lift"), name=f"lift({w.name})")
    lifts = tuple(
        lax_morphism(apex, b, f, {v: products[v].projections[i] for v in w.objects}, name=f"lift_{i}")
        for i, (f, b) in enumerate(sources)
    )
    logger.debug(f"Initial lift over {w.name} of {len(sources)} sources")
    return InitialLift(apex, lifts)


def lift_failure(lift: InitialLift, sources: Sequence[Source], probes: Sequence[LaxObject]) -> str:
    """
    The first probe against which the lift is not initial, or "".

    For every probe ``(V, c)`` and functor ``g: V -> W``, lax morphisms
    into the lift over g must correspond one to one with families of
    lax morphisms into the sources over the ``f_i∘g``.
    """
    w = lift.apex.base
    for probe in probes:
        for g in enumerate_functors(probe.base, w):
            upstairs = [m for m in enumerate_lax_hom(probe, lift.apex) if m.functor == g]
            images = {tuple(compose_lax(leg, m) for leg in lift.lifts) for m in upstairs}
            families: List[List[LaxMorphism]] = []
            for f, b in sources:
                fg = compose_functors(f, g)
                families.append([n for n in enumerate_lax_hom(probe, b) if n.functor == fg])
            if len(images) != len(upstairs) or images != set(cartesian(*families)):
                return probe.name
    return ""
