"""
Finite limits in Cat//X.

Terminal object and products need the matching limits of X pointwise;
pullbacks and equalizers are computed in Cat on the bases and filled
pointwise by pullbacks and equalizers of the cell components in X.
Every constructor returns a :class:`Construction` that can be verified
against probes.
"""

from typing import Dict, List, Optional, Sequence

from laxcat.core.exceptions import (
    MissingLimit,
    MissingPullbacks,
    NoCommonCodomain,
    NoTerminalObject,
    NotParallel,
)
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.constructions import (
    equalizer_category,
    pair_functors,
    product_category,
    product_projections,
    pullback_category,
)
from laxcat.fincat.functor import Functor, constant_functor
from laxcat.fincat.standard import (
    cospan_category,
    discrete_category,
    empty_category,
    parallel_pair,
    terminal_category,
)
from laxcat.laxcomma.objects import LaxMorphism, LaxObject, compose_lax, identity_lax, lax_morphism
from laxcat.laxstruct.construction import LIMIT, Construction
from laxcat.univprop.limits import (
    FamilyProduct,
    equalizer,
    pairing,
    product_map,
    pullback,
    pullback_mediator,
    require_product,
    terminal_object,
)

logger = get_logger(__name__)


def _family_shape(n: int) -> FinCategory:
    return discrete_category([str(i) for i in range(n)], name=f"Disc{n}")


# ============================================================================
# TERMINAL OBJECT
# ============================================================================


def terminal_laxcomma(x: FinCategory) -> Construction:
    """
    ``(1, const 1_X)``.

    Raises:
        NoTerminalObject: if X has no terminal object
    """
    one = terminal_object(x)
    if one is None:
        raise NoTerminalObject(x.name)
    point = terminal_category()
    apex = LaxObject(point, constant_functor(point, x, one, name="const_1"), name="1")
    return Construction("terminal", LIMIT, empty_category(), {}, {}, apex, {})


# ============================================================================
# PRODUCTS
# ============================================================================


def product_laxcomma(first: LaxObject, second: LaxObject) -> Construction:
    """
    ``(W×Y, a×b)`` with ``(a×b)(w, y) = a(w) × b(y)``.

    The projections are ``(π_W, p1)`` and ``(π_Y, p2)``, with the product
    projections of X as cell components.

    Raises:
        MissingProducts: if some ``a(w) × b(y)`` is missing in X
    """
    x = first.workspace
    w, y = first.base, second.base
    base = product_category(w, y)
    factors = {}
    omap: Dict[str, str] = {}
    for u in w.objects:
        for v in y.objects:
            name = base.tagged_object((u, v))
            factors[name] = require_product(x, first.at(u), second.at(v))
            omap[name] = factors[name].apex
    mmap: Dict[str, str] = {}
    for f in w.morphisms:
        for g in y.morphisms:
            name = base.tagged_morphism((f, g))
            mmap[name] = product_map(
                x,
                factors[base.dom(name)],
                factors[base.cod(name)],
                first.structure.mmap[f],
                second.structure.mmap[g],
            )
    structure = Functor(base, x, omap, mmap, name=f"{first.structure.name}x{second.structure.name}")
    apex = LaxObject(base, structure, name=f"{first.name}x{second.name}")

    left, right = product_projections(base, w, y)
    p1 = lax_morphism(apex, first, left, {t: factors[t].p1 for t in base.objects}, name="pi1")
    p2 = lax_morphism(apex, second, right, {t: factors[t].p2 for t in base.objects}, name="pi2")
    return Construction(
        "product",
        LIMIT,
        _family_shape(2),
        {"0": first, "1": second},
        {},
        apex,
        {"0": p1, "1": p2},
    )


def product_pairing(product: Construction, f: LaxMorphism, g: LaxMorphism) -> LaxMorphism:
    """
    The mediating morphism ``<f, g>`` into a binary product.

    Components are the pairings ``<γ_z, χ_z>: c(z) -> a(f z) × b(g z)``.
    """
    if f.dom != g.dom:
        raise NotParallel(f.name, g.name)
    apex = product.apex
    x = apex.workspace
    functor = pair_functors(f.functor, g.functor, apex.base)
    components = {}
    for z in f.dom.base.objects:
        factor = require_product(x, f.cod.at(f.functor.omap[z]), g.cod.at(g.functor.omap[z]))
        components[z] = pairing(
            x,
            FamilyProduct(factor.apex, (factor.p1, factor.p2)),
            (f.component(z), g.component(z)),
            f.dom.at(z),
        )
    return lax_morphism(f.dom, apex, functor, components, name=f"<{f.name},{g.name}>")


def product_lax_map(source: Construction, target: Construction, f: LaxMorphism, g: LaxMorphism) -> LaxMorphism:
    """``f × g`` between two binary products, as ``<f∘π1, g∘π2>``."""
    return product_pairing(
        target,
        compose_lax(f, source.leg("0")),
        compose_lax(g, source.leg("1")),
    )


def product_family_laxcomma(objects: Sequence[LaxObject], x: Optional[FinCategory] = None) -> Construction:
    """
    Iterated binary product ``((o0 × o1) × o2) × ...``.

    The empty family is the terminal object (X must then be given) and a
    single object is its own product.
    """
    if not objects:
        if x is None:
            raise ValueError("the empty product needs the workspace category")
        return terminal_laxcomma(x)
    apex = objects[0]
    legs: List[LaxMorphism] = [identity_lax(apex)]
    for o in objects[1:]:
        step = product_laxcomma(apex, o)
        legs = [compose_lax(leg, step.leg("0")) for leg in legs] + [step.leg("1")]
        apex = step.apex
    return Construction(
        "product",
        LIMIT,
        _family_shape(len(objects)),
        {str(i): o for i, o in enumerate(objects)},
        {},
        apex,
        {str(i): leg for i, leg in enumerate(legs)},
    )


# ============================================================================
# PULLBACKS AND EQUALIZERS
# ============================================================================


def pullback_laxcomma(f: LaxMorphism, g: LaxMorphism) -> Construction:
    """
    Pullback of ``(f, γ): (W, a) -> (Y, b) <- (Z, c): (g, χ)``.

    The base is the pullback ``P`` of f and g in Cat; at ``t = (w, z)``
    the structure is the canonical pullback of ``γ_w`` and ``χ_z`` in X,
    and the projections carry its two legs.

    Raises:
        NoCommonCodomain: if f and g do not share a codomain
        MissingPullbacks: if one of the pointwise pullbacks is missing
    """
    if f.cod != g.cod:
        raise NoCommonCodomain(f.name, g.name)
    x = f.dom.workspace
    square = pullback_category(f.functor, g.functor)
    base = square.category
    corners = {}
    for t in base.objects:
        w, z = square.left.omap[t], square.right.omap[t]
        corner = pullback(x, f.component(w), g.component(z))
        if corner is None:
            raise MissingPullbacks(f"{f.component(w)},{g.component(z)} in {x.name}")
        corners[t] = corner
    mmap: Dict[str, str] = {}
    for m in base.morphisms:
        source, target = corners[base.dom(m)], corners[base.cod(m)]
        left = x.compose(f.dom.structure.mmap[square.left.mmap[m]], source.left)
        right = x.compose(g.dom.structure.mmap[square.right.mmap[m]], source.right)
        mediator = pullback_mediator(x, target, left, right)
        if mediator is None:
            raise MissingPullbacks(f"mediator for {m}")
        mmap[m] = mediator
    structure = Functor(base, x, {t: c.apex for t, c in corners.items()}, mmap, name="d")
    apex = LaxObject(base, structure, name=f"{f.dom.name}x_{f.cod.name}{g.dom.name}")

    pj = lax_morphism(apex, f.dom, square.left, {t: c.left for t, c in corners.items()}, name="pj")
    ph = lax_morphism(apex, g.dom, square.right, {t: c.right for t, c in corners.items()}, name="ph")
    logger.debug(f"Pullback of {f.name}, {g.name}: base {base.size}")
    return Construction(
        "pullback",
        LIMIT,
        cospan_category(),
        {"0": f.dom, "1": g.dom, "2": f.cod},
        {"l": f, "r": g},
        apex,
        {"0": pj, "1": ph, "2": compose_lax(f, pj)},
    )


def equalizer_laxcomma(f: LaxMorphism, g: LaxMorphism) -> Construction:
    """
    Equalizer of parallel ``(f, γ), (g, χ): (W, a) -> (Y, b)``.

    The base is the subcategory E of W where f and g agree; at w the
    structure is the equalizer of ``γ_w`` and ``χ_w`` in X.

    Raises:
        NotParallel: if f and g are not parallel
        MissingLimit: if a pointwise equalizer is missing
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise NotParallel(f.name, g.name)
    x = f.dom.workspace
    base, inclusion = equalizer_category(f.functor, g.functor)
    forks = {}
    for w in base.objects:
        fork = equalizer(x, f.component(w), g.component(w))
        if fork is None:
            raise MissingLimit(f"equalizer({f.component(w)},{g.component(w)}) in {x.name}")
        forks[w] = fork
    a = f.dom.structure
    mmap: Dict[str, str] = {}
    for u in base.morphisms:
        source, target = forks[base.dom(u)], forks[base.cod(u)]
        want = x.compose(a.mmap[inclusion.mmap[u]], source.map)
        found = [m for m in x.hom(source.apex, target.apex) if x.compose(target.map, m) == want]
        if not found:
            raise MissingLimit(f"equalizer mediator for {u}")
        mmap[u] = found[0]
    structure = Functor(base, x, {w: e.apex for w, e in forks.items()}, mmap, name="d")
    apex = LaxObject(base, structure, name=f"eq({f.name},{g.name})")
    leg = lax_morphism(apex, f.dom, inclusion, {w: e.map for w, e in forks.items()}, name="e")
    return Construction(
        "equalizer",
        LIMIT,
        parallel_pair(),
        {"0": f.dom, "1": f.cod},
        {"u": f, "v": g},
        apex,
        {"0": leg, "1": compose_lax(f, leg)},
    )

