"""
Exponentials in Cat//X.

``(Y, b)^(W, a) = (Cat[W, Y], b^a)`` with

    b^a(h) = ∫_w a(w) => b(h(w))

computed as an end in X. On a transformation ``α: h => h'`` the
structure is the unique map between ends induced by ``b(α_w)``.
Currying goes through the swap ``c(z) × a(w) -> a(w) × c(z)`` since the
internal hom of X curries its left factor.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from laxcat.core.exceptions import BijectiveFailure, MissingEnd, MissingLimit
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.constructions import functor_category, opposite, product_category
from laxcat.fincat.functor import Functor, NatTrans
from laxcat.laxcomma.objects import (
    LaxMorphism,
    LaxObject,
    compose_lax,
    enumerate_lax_hom,
    identity_lax,
    lax_morphism,
)
from laxcat.laxstruct.construction import Construction
from laxcat.laxstruct.limits import product_lax_map
from laxcat.univprop.ends import End, end_of
from laxcat.univprop.exponential import Exponential, curry, exponential_map, require_exponential
from laxcat.univprop.limits import product_map, require_product, swap

logger = get_logger(__name__)


@dataclass(frozen=True)
class LaxExponential:
    """
    The exponential object with what is needed to curry into it.

    Attributes:
        source: The exponent ``(W, a)``
        target: The base ``(Y, b)``
        apex: ``(Cat[W, Y], b^a)``
        ends: Object h of ``Cat[W, Y]`` -> the end computing ``b^a(h)``
    """

    source: LaxObject
    target: LaxObject
    apex: LaxObject
    ends: Dict[str, End]

    def hom(self, w: str, h: str) -> Exponential:
        """The internal hom ``a(w) => b(h(w))``."""
        functor = self.apex.base.object_tag(h)
        return require_exponential(
            self.source.workspace, self.source.at(w), self.target.at(functor.omap[w])
        )

    def functor(self, h: str) -> Functor:
        return self.apex.base.object_tag(h)

    def transformation(self, alpha: str) -> NatTrans:
        return self.apex.base.morphism_tag(alpha)


def _bifunctor(source: LaxObject, target: LaxObject, h: Functor, square: FinCategory) -> Functor:
    """``(w, w') ↦ a(w) => b(h(w'))`` on ``W^op × W``."""
    x = source.workspace
    a, b = source.structure, target.structure

    def hom(u: str, v: str) -> Exponential:
        return require_exponential(x, a.omap[u], b.omap[h.omap[v]])

    omap = {}
    for name in square.objects:
        u, v = square.object_tag(name)
        omap[name] = hom(u, v).apex
    mmap = {}
    for name in square.morphisms:
        m, n = square.morphism_tag(name)
        u1, v1 = square.object_tag(square.dom(name))
        u2, v2 = square.object_tag(square.cod(name))
        mmap[name] = exponential_map(x, hom(u1, v1), hom(u2, v2), a.mmap[m], b.mmap[h.mmap[n]])
    return Functor(square, x, omap, mmap, name=f"T_{h.name}")


def exponential_laxcomma(source: LaxObject, target: LaxObject) -> LaxExponential:
    """
    ``(Y, b)^(W, a)``.

    Raises:
        MissingExponential: if some ``a(w) => b(y)`` is missing in X
        MissingEnd: naming the object or transformation of ``Cat[W, Y]``
            whose end (or map between ends) is missing
    """
    x = source.workspace
    w = source.base
    base = functor_category(w, target.base)
    square = product_category(opposite(w), w)

    ends: Dict[str, End] = {}
    for h in base.objects:
        t = _bifunctor(source, target, base.object_tag(h), square)
        try:
            ends[h] = end_of(t, w)
        except MissingLimit as err:
            raise MissingEnd(h) from err

    mmap: Dict[str, str] = {}
    for name in base.morphisms:
        alpha = base.morphism_tag(name)
        h, k = base.dom(name), base.cod(name)
        first, second = base.object_tag(h), base.object_tag(k)
        want = {}
        for v in w.objects:
            src = require_exponential(x, source.at(v), target.at(first.omap[v]))
            dst = require_exponential(x, source.at(v), target.at(second.omap[v]))
            post = exponential_map(
                x, src, dst, x.identity(source.at(v)), target.structure.mmap[alpha.components[v]]
            )
            want[v] = x.compose(post, ends[h].projections[v])
        found = [
            m
            for m in x.hom(ends[h].apex, ends[k].apex)
            if all(x.compose(ends[k].projections[v], m) == want[v] for v in w.objects)
        ]
        if not found:
            raise MissingEnd(name)
        mmap[name] = found[0]

    structure = Functor(
        base,
        x,
        {h: e.apex for h, e in ends.items()},
        mmap,
        name=f"{target.structure.name}^{source.structure.name}",
    )
    apex = LaxObject(base, structure, name=f"{target.name}^{source.name}")
    logger.debug(f"Exponential {apex.name}: base of {len(base.objects)} functors")
    return LaxExponential(source, target, apex, ends)


# ============================================================================
# CURRYING
# ============================================================================


def _into_end(x, end: End, wedge: Dict[str, str], source: str, name: str) -> str:
    for m in x.hom(source, end.apex):
        if all(x.compose(end.projections[v], m) == leg for v, leg in wedge.items()):
            return m
    raise MissingEnd(name)


def curry_lax(exp: LaxExponential, product: Construction, m: LaxMorphism) -> LaxMorphism:
    """
    Transpose ``m: (W, a) × (Z, c) -> (Y, b)`` to ``(Z, c) -> (Y, b)^(W, a)``.

    ``product`` must be the product of ``exp.source`` and ``(Z, c)``.
    """
    x = exp.source.workspace
    w = exp.source.base
    third = product.objects["1"]
    z = third.base
    pair = product.apex.base
    fc = exp.apex.base

    def at(v: str, obj: str) -> str:
        return pair.tagged_object((v, obj))

    functors: Dict[str, str] = {}
    for obj in z.objects:
        h = Functor(
            w,
            exp.target.base,
            {v: m.functor.omap[at(v, obj)] for v in w.objects},
            {u: m.functor.mmap[pair.tagged_morphism((u, z.identity(obj)))] for u in w.morphisms},
        )
        functors[obj] = fc.tagged_object(h)
    mmap = {}
    for k in z.morphisms:
        alpha = NatTrans(
            fc.object_tag(functors[z.dom(k)]),
            fc.object_tag(functors[z.cod(k)]),
            {v: m.functor.mmap[pair.tagged_morphism((w.identity(v), k))] for v in w.objects},
        )
        mmap[k] = fc.tagged_morphism(alpha)
    functor = Functor(z, fc, functors, mmap, name=f"curry({m.functor.name})")

    components = {}
    for obj in z.objects:
        h = functors[obj]
        wedge = {}
        for v in w.objects:
            hom = exp.hom(v, h)
            zx = require_product(x, third.at(obj), exp.source.at(v))
            xz = require_product(x, exp.source.at(v), third.at(obj))
            wedge[v] = curry(x, hom, third.at(obj), x.compose(m.component(at(v, obj)), swap(x, zx, xz)))
        components[obj] = _into_end(x, exp.ends[h], wedge, third.at(obj), h)
    return lax_morphism(third, exp.apex, functor, components, name=f"curry({m.name})")


def uncurry_lax(exp: LaxExponential, product: Construction, n: LaxMorphism) -> LaxMorphism:
    """Inverse of :func:`curry_lax`: ``(Z, c) -> (Y, b)^(W, a)`` back to ``(W, a) × (Z, c) -> (Y, b)``."""
    x = exp.source.workspace
    w = exp.source.base
    third = product.objects["1"]
    z = third.base
    y = exp.target.base
    pair = product.apex.base

    omap, mmap, components = {}, {}, {}
    for name in pair.objects:
        v, obj = pair.object_tag(name)
        h = n.functor.omap[obj]
        omap[name] = exp.functor(h).omap[v]
        hom = exp.hom(v, h)
        zx = require_product(x, third.at(obj), exp.source.at(v))
        xz = require_product(x, exp.source.at(v), third.at(obj))
        leg = x.compose(exp.ends[h].projections[v], n.component(obj))
        lifted = product_map(x, zx, hom.product, leg, x.identity(exp.source.at(v)))
        components[name] = x.compose_path(hom.ev, lifted, swap(x, xz, zx))
    for name in pair.morphisms:
        u, k = pair.morphism_tag(name)
        v = w.dom(u)
        alpha = exp.transformation(n.functor.mmap[k])
        later = exp.functor(n.functor.omap[z.cod(k)])
        mmap[name] = y.compose(later.mmap[u], alpha.components[v])
    functor = Functor(pair, y, omap, mmap, name=f"uncurry({n.functor.name})")
    return lax_morphism(product.apex, exp.target, functor, components, name=f"uncurry({n.name})")


def verify_currying(exp: LaxExponential, product: Construction) -> bool:
    """
    ``curry_lax`` is a bijection ``Hom(W×Z, Y) -> Hom(Z, Y^W)`` inverse to
    ``uncurry_lax``.

    Raises:
        BijectiveFailure: naming the failing morphism
    """
    third = product.objects["1"]
    upstairs = enumerate_lax_hom(product.apex, exp.target)
    downstairs = enumerate_lax_hom(third, exp.apex)
    witness: Tuple[str, ...] = (product.apex.name, exp.target.name)
    if len(upstairs) != len(downstairs):
        raise BijectiveFailure("currying", witness, f"count {len(upstairs)} != {len(downstairs)}")
    images = []
    for m in upstairs:
        image = curry_lax(exp, product, m)
        if uncurry_lax(exp, product, image) != m:
            raise BijectiveFailure("currying", (m.name,), "uncurry does not invert curry")
        images.append(image)
    if set(images) != set(downstairs):
        raise BijectiveFailure("currying", witness, "curry is not onto")
    return True


def verify_currying_naturality(exp: LaxExponential, product: Construction, other: Construction) -> bool:
    """
    ``curry(m∘(id × k)) = curry(m)∘k`` for every ``k: Z' -> Z``.

    ``other`` is the product of ``exp.source`` with ``(Z', c')``.

    Raises:
        BijectiveFailure: naming the failing pair
    """
    third, fourth = product.objects["1"], other.objects["1"]
    ident = identity_lax(exp.source)
    for k in enumerate_lax_hom(fourth, third):
        along = product_lax_map(other, product, ident, k)
        for m in enumerate_lax_hom(product.apex, exp.target):
            left = curry_lax(exp, other, compose_lax(m, along))
            right = compose_lax(curry_lax(exp, product, m), k)
            if left != right:
                raise BijectiveFailure("currying", (m.name, k.name), "not natural in Z")
    return True

