"""
Functors and natural transformations between finite categories.

Both are immutable values with name-based equality (their display name
is not part of equality). Constructors trust their input; the
``validate_*`` functions check the laws exhaustively.
"""

from typing import Dict, Mapping, Optional, Tuple

from laxcat.core.exceptions import (
    FunctorLawViolation,
    NaturalityViolation,
    NotParallel,
    ObjectNotFound,
)
from laxcat.fincat.category import FinCategory


class Functor:
    """
    A functor between finite categories.

    Args:
        source: Domain category
        target: Codomain category
        omap: Object map, total on ``source.objects``
        mmap: Morphism map, total on ``source.morphisms``
        name: Display name
    """

    __slots__ = ("source", "target", "omap", "mmap", "name", "_key", "_hash")

    def __init__(
        self,
        source: FinCategory,
        target: FinCategory,
        omap: Mapping[str, str],
        mmap: Mapping[str, str],
        name: str = "F",
    ):
        self.source = source
        self.target = target
        self.omap: Dict[str, str] = dict(omap)
        self.mmap: Dict[str, str] = dict(mmap)
        self.name = name
        self._key = (
            source,
            target,
            tuple(self.omap.get(x) for x in source.objects),
            tuple(self.mmap.get(f) for f in source.morphisms),
        )
        self._hash = hash(self._key)

    def ob(self, x: str) -> str:
        try:
            return self.omap[x]
        except KeyError:
            raise ObjectNotFound(x, category=self.source.name) from None

    def mor(self, f: str) -> str:
        try:
            return self.mmap[f]
        except KeyError:
            raise ObjectNotFound(f, category=self.source.name, kind="morphism") from None

    def renamed(self, name: str) -> "Functor":
        return Functor(self.source, self.target, self.omap, self.mmap, name=name)

    def parallel_to(self, other: "Functor") -> bool:
        return self.source == other.source and self.target == other.target

    def is_constant(self) -> bool:
        return len(set(self.omap.values())) <= 1 and all(
            self.target.is_identity(g) for g in self.mmap.values()
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Functor):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Functor({self.name!r}: {self.source.name} -> {self.target.name})"


class NatTrans:
    """
    A natural transformation between parallel functors.

    Args:
        source: Functor F
        target: Functor G, parallel to F
        components: Object w of the common source -> morphism F(w) -> G(w)
        name: Display name
    """

    __slots__ = ("source", "target", "components", "name", "_key", "_hash")

    def __init__(
        self,
        source: Functor,
        target: Functor,
        components: Mapping[str, str],
        name: str = "alpha",
    ):
        self.source = source
        self.target = target
        self.components: Dict[str, str] = dict(components)
        self.name = name
        self._key = (
            source,
            target,
            tuple(self.components.get(x) for x in source.source.objects),
        )
        self._hash = hash(self._key)

    def __getitem__(self, w: str) -> str:
        try:
            return self.components[w]
        except KeyError:
            raise ObjectNotFound(w, category=self.source.source.name) from None

    @property
    def shape(self) -> FinCategory:
        """The common source category of both functors."""
        return self.source.source

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            self.source.target.is_identity(c) for c in self.components.values()
        )

    def renamed(self, name: str) -> "NatTrans":
        return NatTrans(self.source, self.target, self.components, name=name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NatTrans):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"NatTrans({self.name!r}: {self.source.name} => {self.target.name})"


# ============================================================================
# VALIDATION
# ============================================================================


def validate_functor(functor: Functor) -> Functor:
    """
    Check totality, typing, identities and composition exhaustively.

    Raises:
        FunctorLawViolation: naming the first offending morphisms
    """
    c, d = functor.source, functor.target
    name = functor.name
    for x in c.objects:
        if x not in functor.omap or not d.has_object(functor.omap[x]):
            raise FunctorLawViolation(name, "object map not total", [x])
    for f in c.morphisms:
        g = functor.mmap.get(f)
        if g is None or not d.has_morphism(g):
            raise FunctorLawViolation(name, "morphism map not total", [f])
        if d.dom(g) != functor.omap[c.dom(f)] or d.cod(g) != functor.omap[c.cod(f)]:
            raise FunctorLawViolation(name, "domain/codomain not preserved", [f])
    for x in c.objects:
        if functor.mmap[c.identity(x)] != d.identity(functor.omap[x]):
            raise FunctorLawViolation(name, "identity not preserved", [c.identity(x)])
    for (g, f), h in c.table.items():
        if functor.mmap[h] != d.compose(functor.mmap[g], functor.mmap[f]):
            raise FunctorLawViolation(name, "composition not preserved", [g, f])
    return functor


def check_parallel(f: Functor, g: Functor) -> None:
    if not f.parallel_to(g):
        raise NotParallel(f.name, g.name)


def is_natural(source: Functor, target: Functor, components: Mapping[str, str]) -> Optional[str]:
    """Return the first morphism whose naturality square fails, or None."""
    c, x = source.source, source.target
    for h in c.morphisms:
        w, y = c.dom(h), c.cod(h)
        left = x.compose(target.mmap[h], components[w])
        right = x.compose(components[y], source.mmap[h])
        if left != right:
            return h
    return None


def validate_nat_trans(alpha: NatTrans) -> NatTrans:
    """
    Check parallelism, typing of components and naturality.

    Raises:
        NotParallel, NaturalityViolation
    """
    f, g = alpha.source, alpha.target
    check_parallel(f, g)
    x = f.target
    for w in f.source.objects:
        comp = alpha.components.get(w)
        if comp is None or not x.has_morphism(comp):
            raise NaturalityViolation(alpha.name, f"component at {w}")
        if x.dom(comp) != f.omap[w] or x.cod(comp) != g.omap[w]:
            raise NaturalityViolation(alpha.name, f"component at {w}")
    failing = is_natural(f, g, alpha.components)
    if failing is not None:
        raise NaturalityViolation(alpha.name, failing)
    return alpha


# ============================================================================
# ALGEBRA
# ============================================================================


def identity_functor(category: FinCategory) -> Functor:
    return Functor(
        category,
        category,
        {x: x for x in category.objects},
        {f: f for f in category.morphisms},
        name=f"id_{category.name}",
    )


def constant_functor(source: FinCategory, target: FinCategory, x: str, name: Optional[str] = None) -> Functor:
    """The functor sending everything to x and its identity."""
    target.require_object(x)
    ix = target.identity(x)
    return Functor(
        source,
        target,
        {w: x for w in source.objects},
        {f: ix for f in source.morphisms},
        name=name or f"const_{x}",
    )


def compose_functors(g: Functor, f: Functor, name: Optional[str] = None) -> Functor:
    """Return ``g∘f``."""
    if f.target != g.source:
        raise NotParallel(f.name, g.name)
    return Functor(
        f.source,
        g.target,
        {x: g.omap[f.omap[x]] for x in f.source.objects},
        {m: g.mmap[f.mmap[m]] for m in f.source.morphisms},
        name=name or f"{g.name}{f.name}",
    )


def identity_nat_trans(functor: Functor) -> NatTrans:
    t = functor.target
    return NatTrans(
        functor,
        functor,
        {w: t.identity(functor.omap[w]) for w in functor.source.objects},
        name=f"id_{functor.name}",
    )


def vertical_compose(beta: NatTrans, alpha: NatTrans, name: Optional[str] = None) -> NatTrans:
    """Return ``beta·alpha`` for ``alpha: F => G`` and ``beta: G => H``."""
    if alpha.target != beta.source:
        raise NotParallel(alpha.name, beta.name)
    x = alpha.source.target
    return NatTrans(
        alpha.source,
        beta.target,
        {w: x.compose(beta.components[w], alpha.components[w]) for w in alpha.shape.objects},
        name=name or f"{beta.name}.{alpha.name}",
    )


def whisker_right(alpha: NatTrans, h: Functor) -> NatTrans:
    """Return ``alpha*h: F∘h => G∘h``, components ``alpha_{h(v)}``."""
    if h.target != alpha.shape:
        raise NotParallel(h.name, alpha.name)
    return NatTrans(
        compose_functors(alpha.source, h),
        compose_functors(alpha.target, h),
        {v: alpha.components[h.omap[v]] for v in h.source.objects},
        name=f"{alpha.name}*{h.name}",
    )


def whisker_left(k: Functor, alpha: NatTrans) -> NatTrans:
    """Return ``k*alpha: k∘F => k∘G``, components ``k(alpha_w)``."""
    if alpha.source.target != k.source:
        raise NotParallel(alpha.name, k.name)
    return NatTrans(
        compose_functors(k, alpha.source),
        compose_functors(k, alpha.target),
        {w: k.mmap[c] for w, c in alpha.components.items()},
        name=f"{k.name}*{alpha.name}",
    )


def functor_key(functor: Functor) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Canonical sort key: object images then morphism images, by position."""
    t = functor.target
    return (
        tuple(t.object_index(functor.omap[x]) for x in functor.source.objects),
        tuple(t.morphism_index(functor.mmap[f]) for f in functor.source.morphisms),
    )
