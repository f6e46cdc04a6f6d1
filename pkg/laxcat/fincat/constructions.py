"""
Standard constructions on finite categories.

Constructed objects and morphisms get canonical names (``(a,b)`` for
pairs, ``inl:a``/``inr:b`` for sums) and carry tags so that callers can
look names up from their components.
"""

from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Tuple

from laxcat.core.exceptions import NotParallel
from laxcat.core.utils.logger import get_logger
from laxcat.core.utils.naming import NameAllocator, identity_name, pair_name, tagged_name
from laxcat.fincat.category import FinCategory, check_size
from laxcat.fincat.enumerate import enumerate_functors, enumerate_nat_trans
from laxcat.fincat.functor import Functor, NatTrans, vertical_compose

logger = get_logger(__name__)


# ============================================================================
# OPPOSITE
# ============================================================================


@lru_cache(maxsize=256)
def opposite(category: FinCategory) -> FinCategory:
    """Same names, domains and codomains swapped, composition reversed."""
    c = category
    return FinCategory(
        f"op({c.name})",
        c.objects,
        [(m, c.cod(m), c.dom(m)) for m in c.morphisms],
        c.identities,
        {(f, g): h for (g, f), h in c.table.items()},
    )


def opposite_functor(functor: Functor) -> Functor:
    """``F^op``, with the same object and morphism maps."""
    return Functor(
        opposite(functor.source),
        opposite(functor.target),
        functor.omap,
        functor.mmap,
        name=f"op({functor.name})",
    )


# ============================================================================
# PRODUCTS AND COPRODUCTS
# ============================================================================


def product_category(a: FinCategory, b: FinCategory, name: Optional[str] = None) -> FinCategory:
    """
    The product ``a × b``.

    Objects are tagged ``(x, y)`` and named ``(x,y)``; morphisms likewise.
    """
    objects = NameAllocator()
    morphisms = NameAllocator()
    obj_tags = {(x, y): objects.claim(pair_name(x, y)) for x in a.objects for y in b.objects}
    mor_tags = {
        (f, g): morphisms.claim(pair_name(f, g)) for f in a.morphisms for g in b.morphisms
    }
    decls = [
        (mor_tags[(f, g)], obj_tags[(a.dom(f), b.dom(g))], obj_tags[(a.cod(f), b.cod(g))])
        for f in a.morphisms
        for g in b.morphisms
    ]
    identities = {
        obj_tags[(x, y)]: mor_tags[(a.identity(x), b.identity(y))]
        for x in a.objects
        for y in b.objects
    }
    table = {
        (mor_tags[(f2, g2)], mor_tags[(f1, g1)]): mor_tags[(a.compose(f2, f1), b.compose(g2, g1))]
        for (f2, f1) in a.table
        for (g2, g1) in b.table
    }
    product = FinCategory(
        name or pair_name(a.name, b.name),
        [obj_tags[(x, y)] for x in a.objects for y in b.objects],
        decls,
        identities,
        table,
        object_tags=obj_tags,
        morphism_tags=mor_tags,
    )
    return check_size(product)


def product_projections(
    product: FinCategory, a: FinCategory, b: FinCategory
) -> Tuple[Functor, Functor]:
    """The projections of a category built by :func:`product_category`."""
    left_o: Dict[str, str] = {}
    right_o: Dict[str, str] = {}
    for x in a.objects:
        for y in b.objects:
            name = product.tagged_object((x, y))
            left_o[name], right_o[name] = x, y
    left_m: Dict[str, str] = {}
    right_m: Dict[str, str] = {}
    for f in a.morphisms:
        for g in b.morphisms:
            name = product.tagged_morphism((f, g))
            left_m[name], right_m[name] = f, g
    return (
        Functor(product, a, left_o, left_m, name="p1"),
        Functor(product, b, right_o, right_m, name="p2"),
    )


def pair_functors(left: Functor, right: Functor, product: FinCategory) -> Functor:
    """The pairing ``<left, right>: Z -> A × B``."""
    if left.source != right.source:
        raise NotParallel(left.name, right.name)
    z = left.source
    return Functor(
        z,
        product,
        {x: product.tagged_object((left.omap[x], right.omap[x])) for x in z.objects},
        {f: product.tagged_morphism((left.mmap[f], right.mmap[f])) for f in z.morphisms},
        name=f"<{left.name},{right.name}>",
    )


def coproduct_category(a: FinCategory, b: FinCategory, name: Optional[str] = None) -> FinCategory:
    """The disjoint union ``a + b`` with ``inl:``/``inr:`` names."""
    objects = NameAllocator()
    morphisms = NameAllocator()
    obj_tags: Dict[Tuple[str, str], str] = {}
    mor_tags: Dict[Tuple[str, str], str] = {}
    decls: List[Tuple[str, str, str]] = []
    identities: Dict[str, str] = {}
    table: Dict[Tuple[str, str], str] = {}
    for tag, part in (("inl", a), ("inr", b)):
        for x in part.objects:
            obj_tags[(tag, x)] = objects.claim(tagged_name(tag, x))
        for f in part.morphisms:
            mor_tags[(tag, f)] = morphisms.claim(tagged_name(tag, f))
        for f in part.morphisms:
            decls.append(
                (mor_tags[(tag, f)], obj_tags[(tag, part.dom(f))], obj_tags[(tag, part.cod(f))])
            )
        for x in part.objects:
            identities[obj_tags[(tag, x)]] = mor_tags[(tag, part.identity(x))]
        for (g, f), h in part.table.items():
            table[(mor_tags[(tag, g)], mor_tags[(tag, f)])] = mor_tags[(tag, h)]
    coproduct = FinCategory(
        name or f"({a.name}+{b.name})",
        [obj_tags[("inl", x)] for x in a.objects] + [obj_tags[("inr", y)] for y in b.objects],
        decls,
        identities,
        table,
        object_tags=obj_tags,
        morphism_tags=mor_tags,
    )
    return check_size(coproduct)


def coproduct_injections(
    coproduct: FinCategory, a: FinCategory, b: FinCategory
) -> Tuple[Functor, Functor]:
    result = []
    for tag, part in (("inl", a), ("inr", b)):
        result.append(
            Functor(
                part,
                coproduct,
                {x: coproduct.tagged_object((tag, x)) for x in part.objects},
                {f: coproduct.tagged_morphism((tag, f)) for f in part.morphisms},
                name=tag,
            )
        )
    return result[0], result[1]


def copair_functors(left: Functor, right: Functor, coproduct: FinCategory) -> Functor:
    """The copairing ``[left, right]: A + B -> Z``."""
    if left.target != right.target:
        raise NotParallel(left.name, right.name)
    omap: Dict[str, str] = {}
    mmap: Dict[str, str] = {}
    for tag, part in (("inl", left), ("inr", right)):
        for x in part.source.objects:
            omap[coproduct.tagged_object((tag, x))] = part.omap[x]
        for f in part.source.morphisms:
            mmap[coproduct.tagged_morphism((tag, f))] = part.mmap[f]
    return Functor(coproduct, left.target, omap, mmap, name=f"[{left.name},{right.name}]")


# ============================================================================
# FUNCTOR CATEGORIES
# ============================================================================


def functor_category(w: FinCategory, y: FinCategory, name: Optional[str] = None) -> FinCategory:
    """
    The functor category ``Cat[w, y]``.

    Objects are named ``h0, h1, ...`` in the canonical order of
    :func:`enumerate_functors`; transformations are named ``id_h<i>`` or
    ``a<i>_<j>_<k>``. Tags index back: ``object_tag(name)`` is the
    :class:`Functor`, ``morphism_tag(name)`` the :class:`NatTrans`.
    """
    functors = enumerate_functors(w, y)
    obj_tags = {}
    for i, functor in enumerate(functors):
        obj_tags[functor.renamed(f"h{i}")] = f"h{i}"
    named = list(obj_tags)

    mor_tags: Dict[NatTrans, str] = {}
    decls: List[Tuple[str, str, str]] = []
    identities: Dict[str, str] = {}
    for i, source in enumerate(named):
        for j, target in enumerate(named):
            for k, alpha in enumerate(enumerate_nat_trans(source, target)):
                if i == j and alpha.is_identity():
                    label = identity_name(f"h{i}")
                    identities[f"h{i}"] = label
                else:
                    label = f"a{i}_{j}_{k}"
                mor_tags[alpha.renamed(label)] = label
                decls.append((label, f"h{i}", f"h{j}"))

    outgoing: Dict[str, List[NatTrans]] = {}
    for alpha in mor_tags:
        outgoing.setdefault(obj_tags[alpha.source], []).append(alpha)
    table = {}
    for alpha in mor_tags:
        for beta in outgoing.get(obj_tags[alpha.target], ()):
            table[(mor_tags[beta], mor_tags[alpha])] = mor_tags[vertical_compose(beta, alpha)]

    category = FinCategory(
        name or f"Cat({w.name},{y.name})",
        [f"h{i}" for i in range(len(named))],
        decls,
        identities,
        table,
        object_tags=obj_tags,
        morphism_tags=mor_tags,
    )
    logger.debug(f"Built {category!r}")
    return check_size(category)


# ============================================================================
# COMMA, PULLBACK AND EQUALIZER CATEGORIES
# ============================================================================


class Comma(NamedTuple):
    """A comma category ``f↓y`` with its projection to the domain of f."""

    category: FinCategory
    projection: Functor
    legs: Dict[str, str]  # object (w,h) -> h: f(w) -> y


def comma_over(f: Functor, y: str) -> Comma:
    """
    The comma category ``f↓y``.

    Objects are pairs ``(w, h: f(w) -> y)``; a morphism ``(u, h')`` goes
    from ``(w, h'∘f(u))`` to ``(w', h')``.

    Raises:
        ObjectNotFound: if y is not an object of the target of f
    """
    w, target = f.source, f.target
    target.require_object(y)
    obj_tags: Dict[Tuple[str, str], str] = {}
    legs: Dict[str, str] = {}
    for x in w.objects:
        for h in target.hom(f.omap[x], y):
            obj_tags[(x, h)] = pair_name(x, h)
            legs[pair_name(x, h)] = h

    mor_tags: Dict[Tuple[str, str], str] = {}
    decls = []
    for u in w.morphisms:
        for h2 in target.hom(f.omap[w.cod(u)], y):
            h1 = target.compose(h2, f.mmap[u])
            mor_tags[(u, h2)] = pair_name(u, h2)
            decls.append((pair_name(u, h2), obj_tags[(w.dom(u), h1)], obj_tags[(w.cod(u), h2)]))

    identities = {name: pair_name(w.identity(x), h) for (x, h), name in obj_tags.items()}
    table = {}
    for u1 in w.morphisms:
        for h1 in target.hom(f.omap[w.cod(u1)], y):
            for u2 in w.out_of(w.cod(u1)):
                for h2 in target.hom(f.omap[w.cod(u2)], y):
                    if target.compose(h2, f.mmap[u2]) == h1:
                        table[(mor_tags[(u2, h2)], mor_tags[(u1, h1)])] = mor_tags[
                            (w.compose(u2, u1), h2)
                        ]

    category = check_size(
        FinCategory(
            f"comma_{y}",
            list(obj_tags.values()),
            decls,
            identities,
            table,
            object_tags=obj_tags,
            morphism_tags=mor_tags,
        )
    )
    projection = Functor(
        category,
        w,
        {name: x for (x, _), name in obj_tags.items()},
        {name: u for (u, _), name in mor_tags.items()},
        name="P",
    )
    return Comma(category, projection, legs)


class CatPullback(NamedTuple):
    """The pullback of a cospan of functors, with its two projections."""

    category: FinCategory
    left: Functor
    right: Functor


def pullback_category(f: Functor, g: Functor) -> CatPullback:
    """
    Pullback of ``f: W -> Y`` and ``g: Z -> Y`` in Cat.

    It is the subcategory of ``W × Z`` on pairs that agree in Y.
    """
    if f.target != g.target:
        raise NotParallel(f.name, g.name)
    w, z = f.source, g.source
    obj_tags = {
        (x, v): pair_name(x, v)
        for x in w.objects
        for v in z.objects
        if f.omap[x] == g.omap[v]
    }
    mor_tags = {
        (u, t): pair_name(u, t)
        for u in w.morphisms
        for t in z.morphisms
        if f.mmap[u] == g.mmap[t]
    }
    decls = [
        (name, obj_tags[(w.dom(u), z.dom(t))], obj_tags[(w.cod(u), z.cod(t))])
        for (u, t), name in mor_tags.items()
    ]
    identities = {name: mor_tags[(w.identity(x), z.identity(v))] for (x, v), name in obj_tags.items()}
    table = {}
    for (u1, t1), n1 in mor_tags.items():
        for (u2, t2), n2 in mor_tags.items():
            if w.cod(u1) == w.dom(u2) and z.cod(t1) == z.dom(t2):
                table[(n2, n1)] = mor_tags[(w.compose(u2, u1), z.compose(t2, t1))]
    category = check_size(
        FinCategory(
            f"({w.name}x{z.name})",
            list(obj_tags.values()),
            decls,
            identities,
            table,
            object_tags=obj_tags,
            morphism_tags=mor_tags,
        )
    )
    left = Functor(
        category,
        w,
        {n: x for (x, _), n in obj_tags.items()},
        {n: u for (u, _), n in mor_tags.items()},
        name="j",
    )
    right = Functor(
        category,
        z,
        {n: v for (_, v), n in obj_tags.items()},
        {n: t for (_, t), n in mor_tags.items()},
        name="h",
    )
    return CatPullback(category, left, right)


def equalizer_category(f: Functor, g: Functor) -> Tuple[FinCategory, Functor]:
    """The subcategory of W where two parallel functors agree, with its inclusion."""
    if not f.parallel_to(g):
        raise NotParallel(f.name, g.name)
    w = f.source
    objects = [x for x in w.objects if f.omap[x] == g.omap[x]]
    kept = set(objects)
    morphisms = [
        (u, w.dom(u), w.cod(u))
        for u in w.morphisms
        if f.mmap[u] == g.mmap[u] and w.dom(u) in kept and w.cod(u) in kept
    ]
    names = {m for m, _, _ in morphisms}
    table = {(b, a): c for (b, a), c in w.table.items() if a in names and b in names}
    category = FinCategory(
        f"eq({f.name},{g.name})",
        objects,
        morphisms,
        {x: w.identity(x) for x in objects},
        table,
    )
    inclusion = Functor(
        category, w, {x: x for x in objects}, {m: m for m in names}, name="e"
    )
    return category, inclusion
