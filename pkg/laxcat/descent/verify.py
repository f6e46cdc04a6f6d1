"""
Instance checks for descent along ``L`` and ``LU``.

Effective descent in Cat//X is not decidable by enumeration, so the
statements that transfer descent from Cat are checked one instance at a
time: the pullback of ``L(p)`` along any probe is again of the form
``L(-)`` when the initial object of X is strict, and pulling back along
the counit ``ι`` computes ``LU``.
"""

from typing import Optional

from laxcat.core.exceptions import NotAPullbackSquare, NotFullyFaithful, StrictInitialMissing
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.functor import Functor
from laxcat.fincat.properties import is_fully_faithful, non_faithful_witness
from laxcat.laxcomma.adjunction import L, iota
from laxcat.laxcomma.objects import LaxMorphism, compose_lax, enumerate_lax_hom
from laxcat.laxstruct.limits import pullback_laxcomma
from laxcat.univprop.checks import strict_initial_check
from laxcat.univprop.diagram import Cone, Diagram, is_limit
from laxcat.univprop.limits import Pullback, initial_object

logger = get_logger(__name__)


def obstruction_check(v: Functor, q: str, along: str, square: Pullback) -> bool:
    """
    Whether the apex of a pullback of ``V(q)`` comes from X.

    Args:
        v: Fully faithful functor ``X -> N``
        q: Morphism of X
        along: Morphism of N into ``V(cod q)``
        square: Pullback of ``V(q)`` and ``along`` in N

    Returns:
        True iff some object x of X has ``V(x) ≅ apex``

    Raises:
        NotFullyFaithful: if v is not fully faithful
        NotAPullbackSquare: if the square is not a pullback in N
    """
    if not is_fully_faithful(v):
        raise NotFullyFaithful(v.name, non_faithful_witness(v) or ())
    n = v.target
    vq = v.mmap[q]
    legs = {"0": square.left, "1": square.right, "2": n.compose(vq, square.left)}
    if not is_limit(Diagram.cospan(n, vq, along), Cone(square.apex, legs)):
        raise NotAPullbackSquare(square.apex)
    found = next((x for x in v.source.objects if n.isomorphisms(v.omap[x], square.apex)), None)
    logger.debug(f"Obstruction at {square.apex}: {'x=' + found if found else 'none'}")
    return found is not None


def _require_strict(x) -> str:
    if not strict_initial_check(x):
        raise StrictInitialMissing(x.name)
    return initial_object(x)


def verify_L_pullback_zero(p: Functor, probe: LaxMorphism) -> bool:
    """
    The pullback of ``L(p)`` along ``probe`` has constant-initial structure.

    The leg back to ``L(E)`` must have invertible components, so the
    pullback is ``L`` of its base up to isomorphism.

    Raises:
        StrictInitialMissing: if the initial object of X is not strict
    """
    x = probe.dom.workspace
    zero = _require_strict(x)
    pb = pullback_laxcomma(L(x, p), probe)
    apex = pb.apex
    constant = all(x.isomorphisms(apex.at(t), zero) for t in apex.base.objects)
    leg = pb.leg("0")
    invertible = all(x.is_iso(c) for c in leg.cell.components.values())
    if not (constant and invertible):
        logger.warning(f"Pullback of L({p.name}) along {probe.name} is not constant-initial")
    return constant and invertible


def lu_comparison(m: LaxMorphism) -> Optional[LaxMorphism]:
    """
    An isomorphism ``L(W) -> P`` over ``L(Y)`` where P is the pullback of
    ``m`` along ``ι``, or None.
    """
    x = m.dom.workspace
    pb = pullback_laxcomma(m, iota(m.cod))
    target = L(x, m.functor)
    leg = pb.leg("1")
    if pb.apex.base.size != m.dom.base.size:
        return None
    size = len(m.dom.base.objects), len(m.dom.base.morphisms)
    for i in enumerate_lax_hom(target.dom, pb.apex):
        if (len(set(i.functor.omap.values())), len(set(i.functor.mmap.values()))) != size:
            continue
        if all(x.is_iso(c) for c in i.cell.components.values()) and compose_lax(leg, i) == target:
            return i
    return None


def verify_LU_pullback(m: LaxMorphism) -> bool:
    """
    ``LU(m)`` is the pullback of ``m`` along the counit at its codomain.

    Raises:
        StrictInitialMissing: if the initial object of X is not strict
    """
    _require_strict(m.dom.workspace)
    ok = lu_comparison(m) is not None
    logger.debug(f"LU pullback for {m.name}: {ok}")
    return ok
