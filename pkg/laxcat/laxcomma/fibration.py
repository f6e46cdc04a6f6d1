"""
Cartesian lifts for the fibration ``U: Cat//X -> Cat``.

The lift of ``f: W -> Y`` at ``(Y, b)`` is the strict morphism
``(f, id): (W, b∘f) -> (Y, b)``. Every ``(f, γ)`` factors as the vertical
``(id_W, γ)`` followed by that lift.
"""

from typing import Optional, Tuple

from laxcat.core.utils.logger import get_logger
from laxcat.fincat.enumerate import enumerate_functors
from laxcat.fincat.functor import Functor, compose_functors, identity_functor
from laxcat.laxcomma.objects import (
    LaxMorphism,
    LaxObject,
    compose_lax,
    enumerate_lax_hom,
    lax_morphism,
)
from laxcat.laxcomma.truncation import Truncation

logger = get_logger(__name__)


def restrict(cod: LaxObject, f: Functor) -> LaxObject:
    """``(W, b∘f)``, the domain of the cartesian lift."""
    return LaxObject(f.source, compose_functors(cod.structure, f), name=f"{cod.name}*{f.name}")


def cartesian_lift(cod: LaxObject, f: Functor) -> LaxMorphism:
    """``(f, id): (W, b∘f) -> (Y, b)``."""
    dom = restrict(cod, f)
    x = cod.workspace
    return lax_morphism(
        dom, cod, f, {w: x.identity(dom.at(w)) for w in f.source.objects}, name=f"lift_{f.name}"
    )


def vertical_factorization(m: LaxMorphism) -> Tuple[LaxMorphism, LaxMorphism]:
    """
    Split ``(f, γ)`` into ``(id_W, γ): (W, a) -> (W, b∘f)`` and the
    cartesian lift ``(f, id)``; their composite is ``m``.
    """
    lift = cartesian_lift(m.cod, m.functor)
    vertical = lax_morphism(
        m.dom, lift.dom, identity_functor(m.dom.base), m.cell.components, name=f"v_{m.name}"
    )
    return vertical, lift


def factorization_failure(m: LaxMorphism, trunc: Truncation) -> Optional[Tuple[str, str]]:
    """
    Test cartesianness of m against every window object.

    For every ``g: (Z, c) -> cod`` and every functor ``k: Z -> W`` with
    ``f∘k = U(g)`` there must be exactly one ``h`` over k with ``m∘h = g``.

    Returns:
        None, or ``(object, reason)`` naming the first failure
    """
    for probe in trunc.objects:
        into_dom = enumerate_lax_hom(probe, m.dom)
        functors = enumerate_functors(probe.base, m.dom.base)
        for g in enumerate_lax_hom(probe, m.cod):
            by_functor = {}
            for h in into_dom:
                if compose_functors(m.functor, h.functor) != g.functor:
                    continue
                if compose_lax(m, h) == g:
                    by_functor.setdefault(h.functor, []).append(h)
            if any(len(hs) > 1 for hs in by_functor.values()):
                return probe.name, "factorization not unique"
            for k in functors:
                if compose_functors(m.functor, k) == g.functor and k not in by_functor:
                    return probe.name, f"no factorization over {k.name}"
    return None


def is_cartesian(m: LaxMorphism, trunc: Truncation) -> bool:
    return factorization_failure(m, trunc) is None
