"""
Slice categories, change of base along a morphism and its left adjoint.

An object of ``C/v`` is a morphism ``m: x -> v`` and carries m's name; a
morphism ``m -> m'`` is a ``k: x -> x'`` with ``m'∘k = m`` and is named
``(k,m')``. ``q*`` uses the canonical pullback of the oracle, so its
functor laws hold on the nose.
"""

from typing import Dict, List, NamedTuple, Tuple

from laxcat.core.exceptions import MissingPullback
from laxcat.core.utils.logger import get_logger
from laxcat.core.utils.naming import pair_name
from laxcat.fincat.category import FinCategory, check_size
from laxcat.fincat.functor import Functor, validate_functor
from laxcat.univprop.limits import Pullback, pullback, pullback_mediator

logger = get_logger(__name__)


class SliceCategory:
    """
    The slice ``C/v`` with references back to C.

    Args:
        base: The category C
        target: The object v
    """

    def __init__(self, base: FinCategory, target: str):
        base.require_object(target)
        self.base = base
        self.target = target
        objects = [m for x in base.objects for m in base.hom(x, target)]
        obj_tags = {m: m for m in objects}
        mor_tags: Dict[Tuple[str, str], str] = {}
        decls: List[Tuple[str, str, str]] = []
        for m in objects:
            for k in base.out_of(base.dom(m)):
                for m2 in base.hom(base.cod(k), target):
                    if base.compose(m2, k) == m:
                        name = pair_name(k, m2)
                        mor_tags[(k, m2)] = name
                        decls.append((name, m, m2))
        identities = {m: mor_tags[(base.identity(base.dom(m)), m)] for m in objects}
        table = {}
        for (k1, m1), first in mor_tags.items():
            for (k2, m2), second in mor_tags.items():
                if base.cod(k1) == base.dom(k2) and base.compose(m2, k2) == m1:
                    table[(second, first)] = mor_tags[(base.compose(k2, k1), m2)]
        self.category = check_size(
            FinCategory(
                f"{base.name}/{target}",
                objects,
                decls,
                identities,
                table,
                object_tags=obj_tags,
                morphism_tags=mor_tags,
            )
        )

    def __repr__(self) -> str:
        return f"SliceCategory({self.category.name!r}, {len(self.category.objects)} objects)"

    def domain(self, m: str) -> str:
        """The object x of C underlying the slice object ``m: x -> v``."""
        return self.base.dom(m)

    def underlying(self, f: str) -> str:
        """The morphism k of C underlying a slice morphism."""
        return self.category.morphism_tag(f)[0]

    def morphism(self, k: str, cod: str) -> str:
        """The slice morphism given by ``k`` into the slice object ``cod``."""
        return self.category.tagged_morphism((k, cod))


def slice_category(c: FinCategory, v: str) -> SliceCategory:
    """
    ``C/v``.

    Raises:
        ObjectNotFound: if v is not an object of C
    """
    return SliceCategory(c, v)


class BaseChange(NamedTuple):
    """``q*: C/v -> C/u`` with its slices and the chosen pullback squares."""

    functor: Functor
    source: SliceCategory
    target: SliceCategory
    squares: Dict[str, Pullback]


def change_of_base(c: FinCategory, q: str) -> BaseChange:
    """
    ``q*: C/v -> C/u`` for ``q: u -> v``.

    ``q*(m)`` is the leg to u of the canonical pullback of m along q;
    on morphisms it is the induced mediator.

    Raises:
        MissingPullback: naming the first slice object with no pullback
    """
    source = SliceCategory(c, c.cod(q))
    target = SliceCategory(c, c.dom(q))
    squares: Dict[str, Pullback] = {}
    for m in source.category.objects:
        square = pullback(c, m, q)
        if square is None:
            raise MissingPullback(m)
        squares[m] = square
    omap = {m: squares[m].right for m in squares}
    mmap = {}
    for f in source.category.morphisms:
        k = source.underlying(f)
        first, second = squares[source.category.dom(f)], squares[source.category.cod(f)]
        mediator = pullback_mediator(c, second, c.compose(k, first.left), first.right)
        if mediator is None:
            raise MissingPullback(source.category.cod(f))
        mmap[f] = target.morphism(mediator, second.right)
    functor = Functor(source.category, target.category, omap, mmap, name=f"{q}*")
    logger.debug(f"Change of base along {q}: {len(omap)} objects")
    return BaseChange(validate_functor(functor), source, target, squares)


def sum_functor(q: str, source: SliceCategory, target: SliceCategory) -> Functor:
    """``Σ_q: C/u -> C/v``, postcomposition with q."""
    c = source.base
    omap = {m: c.compose(q, m) for m in source.category.objects}
    mmap = {
        f: target.morphism(source.underlying(f), omap[source.category.cod(f)])
        for f in source.category.morphisms
    }
    return Functor(source.category, target.category, omap, mmap, name=f"Sigma_{q}")
