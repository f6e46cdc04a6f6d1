"""
Initial object and coproducts in Cat//X.

Both exist for every X: the initial object is the empty category with
its empty functor, and ``(W, a) + (Y, b) = (W + Y, [a, b])`` with strict
injections.
"""

from typing import List, Sequence

from laxcat.core.exceptions import NotParallel
from laxcat.fincat.category import FinCategory
from laxcat.fincat.constructions import copair_functors, coproduct_category, coproduct_injections
from laxcat.fincat.functor import Functor
from laxcat.fincat.standard import discrete_category, empty_category
from laxcat.laxcomma.objects import LaxMorphism, LaxObject, compose_lax, identity_lax, lax_morphism, strict_morphism
from laxcat.laxstruct.construction import COLIMIT, Construction


def initial_laxcomma(x: FinCategory) -> Construction:
    """``(∅, !)``; its unique morphism to any object is the empty one."""
    empty = empty_category()
    apex = LaxObject(empty, Functor(empty, x, {}, {}, name="!"), name="0")
    return Construction("initial", COLIMIT, empty_category(), {}, {}, apex, {})


def from_initial_lax(initial: Construction, o: LaxObject) -> LaxMorphism:
    empty = initial.apex.base
    return lax_morphism(initial.apex, o, Functor(empty, o.base, {}, {}, name="!"), {}, name="!")


def coproduct_laxcomma(first: LaxObject, second: LaxObject) -> Construction:
    """``(W + Y, [a, b])`` with strict injections ``(inl, id)`` and ``(inr, id)``."""
    base = coproduct_category(first.base, second.base)
    structure = copair_functors(first.structure, second.structure, base)
    apex = LaxObject(base, structure, name=f"{first.name}+{second.name}")
    inl, inr = coproduct_injections(base, first.base, second.base)
    return Construction(
        "coproduct",
        COLIMIT,
        discrete_category(["0", "1"], name="Disc2"),
        {"0": first, "1": second},
        {},
        apex,
        {
            "0": strict_morphism(first, apex, inl, name="inl"),
            "1": strict_morphism(second, apex, inr, name="inr"),
        },
    )


def copair_lax(coproduct: Construction, f: LaxMorphism, g: LaxMorphism) -> LaxMorphism:
    """
    The copairing ``[f, g]: (W + Y, [a, b]) -> (Z, c)``.

    Its cell is γ on the left summand and χ on the right one.
    """
    if f.cod != g.cod:
        raise NotParallel(f.name, g.name)
    apex = coproduct.apex
    base = apex.base
    functor = copair_functors(f.functor, g.functor, base)
    components = {}
    for tag, m in (("inl", f), ("inr", g)):
        for w in m.dom.base.objects:
            components[base.tagged_object((tag, w))] = m.component(w)
    return lax_morphism(apex, f.cod, functor, components, name=f"[{f.name},{g.name}]")


def coproduct_family(objects: Sequence[LaxObject], x: FinCategory) -> Construction:
    """Iterated binary coproduct; the empty family is the initial object."""
    if not objects:
        return initial_laxcomma(x)
    apex = objects[0]
    legs: List[LaxMorphism] = [identity_lax(apex)]
    for o in objects[1:]:
        step = coproduct_laxcomma(apex, o)
        legs = [compose_lax(step.leg("0"), leg) for leg in legs] + [step.leg("1")]
        apex = step.apex
    n = len(objects)
    return Construction(
        "coproduct",
        COLIMIT,
        discrete_category([str(i) for i in range(n)], name=f"Disc{n}"),
        {str(i): o for i, o in enumerate(objects)},
        {},
        apex,
        {str(i): leg for i, leg in enumerate(legs)},
    )
