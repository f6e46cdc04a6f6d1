"""
Named finite limits and colimits on top of the generic oracle.

Products of families are iterated canonical binary products, folded
from the left in index order. Absence is a value (None); callers that
need an instance raise the matching ``Missing*`` error themselves.
"""

from functools import lru_cache
from typing import List, NamedTuple, Optional, Sequence, Tuple

from laxcat.core.exceptions import MissingProducts
from laxcat.fincat.category import FinCategory
from laxcat.univprop.diagram import Diagram, find_colimit, find_limit


class Product(NamedTuple):
    """A binary product ``x × y`` with its projections."""

    apex: str
    p1: str
    p2: str


class FamilyProduct(NamedTuple):
    """An iterated product with one projection per factor."""

    apex: str
    projections: Tuple[str, ...]


class Equalizer(NamedTuple):
    apex: str
    map: str


class Pullback(NamedTuple):
    """Apex with legs to the domains of the cospan ``f``, ``g``."""

    apex: str
    left: str
    right: str


class Coequalizer(NamedTuple):
    apex: str
    map: str


# ============================================================================
# TERMINAL AND INITIAL
# ============================================================================


def terminal_object(c: FinCategory) -> Optional[str]:
    """The canonically least terminal object, or None."""
    for x in c.objects:
        if all(len(c.hom(y, x)) == 1 for y in c.objects):
            return x
    return None


def initial_object(c: FinCategory) -> Optional[str]:
    for x in c.objects:
        if all(len(c.hom(x, y)) == 1 for y in c.objects):
            return x
    return None


def to_terminal(c: FinCategory, x: str, terminal: str) -> str:
    return c.hom(x, terminal)[0]


def from_initial(c: FinCategory, initial: str, x: str) -> str:
    return c.hom(initial, x)[0]


def is_isomorphic_objects(c: FinCategory, x: str, y: str) -> bool:
    return bool(c.isomorphisms(x, y))


# ============================================================================
# PRODUCTS
# ============================================================================


@lru_cache(maxsize=8192)
def binary_product(c: FinCategory, x: str, y: str) -> Optional[Product]:
    """The canonical product ``x × y``, or None."""
    cone = find_limit(Diagram.discrete(c, [x, y]))
    if cone is None:
        return None
    return Product(cone.apex, cone.legs["0"], cone.legs["1"])


def require_product(c: FinCategory, x: str, y: str) -> Product:
    product = binary_product(c, x, y)
    if product is None:
        raise MissingProducts(f"{x}x{y} in {c.name}")
    return product


def product_of(c: FinCategory, factors: Sequence[str]) -> Optional[FamilyProduct]:
    """
    Iterated canonical product ``((x0 × x1) × x2) × ...``.

    The empty family gives the terminal object, a single factor gives
    itself with its identity.
    """
    if not factors:
        terminal = terminal_object(c)
        return None if terminal is None else FamilyProduct(terminal, ())
    apex = factors[0]
    projections: List[str] = [c.identity(apex)]
    for x in factors[1:]:
        product = binary_product(c, apex, x)
        if product is None:
            return None
        projections = [c.compose(p, product.p1) for p in projections] + [product.p2]
        apex = product.apex
    return FamilyProduct(apex, tuple(projections))


def pairing(c: FinCategory, product: FamilyProduct, legs: Sequence[str], source: str) -> str:
    """The unique ``source -> product`` whose composites with the projections are ``legs``."""
    want = tuple(legs)
    for m in c.hom(source, product.apex):
        if tuple(c.compose(p, m) for p in product.projections) == want:
            return m
    raise MissingProducts(f"pairing into {product.apex}")


def product_map(c: FinCategory, source: Product, target: Product, f: str, g: str) -> str:
    """``f × g: source -> target`` for ``f: x -> x'`` and ``g: y -> y'``."""
    want = (c.compose(f, source.p1), c.compose(g, source.p2))
    for m in c.hom(source.apex, target.apex):
        if (c.compose(target.p1, m), c.compose(target.p2, m)) == want:
            return m
    raise MissingProducts(f"{f}x{g}")


def swap(c: FinCategory, xy: Product, yx: Product) -> str:
    """The symmetry ``x × y -> y × x``."""
    for m in c.hom(xy.apex, yx.apex):
        if c.compose(yx.p1, m) == xy.p2 and c.compose(yx.p2, m) == xy.p1:
            return m
    raise MissingProducts("swap")


# ============================================================================
# EQUALIZERS, PULLBACKS, COEQUALIZERS
# ============================================================================


def equalizer(c: FinCategory, f: str, g: str) -> Optional[Equalizer]:
    cone = find_limit(Diagram.parallel(c, f, g))
    return None if cone is None else Equalizer(cone.apex, cone.legs["0"])


@lru_cache(maxsize=8192)
def pullback(c: FinCategory, f: str, g: str) -> Optional[Pullback]:
    """Canonical pullback of the cospan ``f: a -> x <- b: g``."""
    cone = find_limit(Diagram.cospan(c, f, g))
    return None if cone is None else Pullback(cone.apex, cone.legs["0"], cone.legs["1"])


def pullback_mediator(c: FinCategory, square: Pullback, left: str, right: str) -> Optional[str]:
    """The unique map into a pullback apex with the given legs."""
    if c.dom(left) != c.dom(right):
        return None
    for m in c.hom(c.dom(left), square.apex):
        if c.compose(square.left, m) == left and c.compose(square.right, m) == right:
            return m
    return None


def coequalizer(c: FinCategory, f: str, g: str) -> Optional[Coequalizer]:
    cocone = find_colimit(Diagram.parallel(c, f, g))
    return None if cocone is None else Coequalizer(cocone.apex, cocone.legs["1"])


def coequalizer_mediator(c: FinCategory, coeq: Coequalizer, h: str) -> Optional[str]:
    """The unique ``m`` with ``m∘coeq.map = h``."""
    for m in c.hom(coeq.apex, c.cod(h)):
        if c.compose(m, coeq.map) == h:
            return m
    return None


def binary_coproduct(c: FinCategory, x: str, y: str) -> Optional[Product]:
    """Coproduct ``x + y`` with injections (stored in ``p1``, ``p2``)."""
    cocone = find_colimit(Diagram.discrete(c, [x, y]))
    if cocone is None:
        return None
    return Product(cocone.apex, cocone.legs["0"], cocone.legs["1"])
