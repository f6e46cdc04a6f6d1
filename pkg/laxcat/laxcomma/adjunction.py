"""
The adjoints ``L ⊣ U ⊣ R`` and a generic adjunction verifier.

``L`` equips a category with the constant functor at the initial object
of X, ``R`` with the constant functor at the terminal object. An
:class:`Adjunction` describes an adjunction on finite windows of both
sides; :func:`verify_adjunction` checks that transposition
``g ↦ R(g)∘η`` is a bijection natural in both variables.
"""

from dataclasses import dataclass
from typing import Any, Callable, Generic, List, Optional, Sequence, TypeVar

from laxcat.core.exceptions import BijectiveFailure, NoInitialObject, NoTerminalObject
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.enumerate import enumerate_functors, iter_nat_trans
from laxcat.fincat.functor import Functor, compose_functors, constant_functor, identity_functor
from laxcat.fincat.properties import find_isomorphism
from laxcat.laxcomma.objects import (
    LaxMorphism,
    LaxObject,
    compose_lax,
    enumerate_lax_hom,
    identity_lax,
    lax_morphism,
)
from laxcat.univprop.limits import initial_object, terminal_object

logger = get_logger(__name__)

A = TypeVar("A")
B = TypeVar("B")


# ============================================================================
# L AND R
# ============================================================================


def _constant_object(x: FinCategory, w: FinCategory, point: str, tag: str) -> LaxObject:
    return LaxObject(w, constant_functor(w, x, point, name=f"{tag}_{w.name}"), name=f"{tag}({w.name})")


def L(x: FinCategory, value):
    """
    ``L(W) = (W, 0)`` and ``L(f) = (f, ι)``.

    Raises:
        NoInitialObject: if X has no initial object
    """
    zero = initial_object(x)
    if zero is None:
        raise NoInitialObject(x.name)
    if isinstance(value, FinCategory):
        return _constant_object(x, value, zero, "L")
    if isinstance(value, Functor):
        dom = _constant_object(x, value.source, zero, "L")
        cod = _constant_object(x, value.target, zero, "L")
        components = {w: x.identity(zero) for w in value.source.objects}
        return lax_morphism(dom, cod, value, components, name=f"L({value.name})")
    raise TypeError(f"L is not defined on {type(value).__name__}")


def R(x: FinCategory, value):
    """
    ``R(W) = (W, 1)`` and ``R(f) = (f, τ)``.

    Raises:
        NoTerminalObject: if X has no terminal object
    """
    one = terminal_object(x)
    if one is None:
        raise NoTerminalObject(x.name)
    if isinstance(value, FinCategory):
        return _constant_object(x, value, one, "R")
    if isinstance(value, Functor):
        dom = _constant_object(x, value.source, one, "R")
        cod = _constant_object(x, value.target, one, "R")
        components = {w: x.identity(one) for w in value.source.objects}
        return lax_morphism(dom, cod, value, components, name=f"R({value.name})")
    raise TypeError(f"R is not defined on {type(value).__name__}")


def iota(o: LaxObject) -> LaxMorphism:
    """The counit ``(id_W, ι_a): L U (W, a) -> (W, a)``."""
    x = o.workspace
    zero = initial_object(x)
    if zero is None:
        raise NoInitialObject(x.name)
    dom = _constant_object(x, o.base, zero, "L")
    components = {w: x.hom(zero, o.at(w))[0] for w in o.base.objects}
    return lax_morphism(dom, o, identity_functor(o.base), components, name=f"iota_{o.name}")


def tau(o: LaxObject) -> LaxMorphism:
    """The unit ``(id_W, τ_a): (W, a) -> R U (W, a)``."""
    x = o.workspace
    one = terminal_object(x)
    if one is None:
        raise NoTerminalObject(x.name)
    cod = _constant_object(x, o.base, one, "R")
    components = {w: x.hom(o.at(w), one)[0] for w in o.base.objects}
    return lax_morphism(o, cod, identity_functor(o.base), components, name=f"tau_{o.name}")


def l_preserves_terminal(x: FinCategory) -> bool:
    """``L(1)`` is terminal in Cat//X iff X is equivalent to the terminal category."""
    return bool(x.objects) and all(len(x.hom(a, b)) == 1 for a in x.objects for b in x.objects)


# ============================================================================
# GENERIC ADJUNCTIONS
# ============================================================================


@dataclass
class Adjunction(Generic[A, B]):
    """
    An adjunction ``left ⊣ right`` between windows of two categories.

    The left category has objects of type A, the right one of type B.
    Morphisms are opaque values handled by the supplied callables.

    Attributes:
        name: Label used in failure reports
        left_objects: Window of the domain of ``left``
        right_objects: Window of the domain of ``right``
        left_ob, left_mor: ``left`` on objects and morphisms
        right_ob, right_mor: ``right`` on objects and morphisms
        left_hom, right_hom: Hom enumerators of the two categories
        left_compose, right_compose: Composition ``(g, f) -> g∘f``
        left_identity, right_identity: Identity morphisms
        unit: ``η_a: a -> right(left(a))``
        counit: ``ε_b: left(right(b)) -> b``, for the triangle identities
    """

    name: str
    left_objects: Sequence[A]
    right_objects: Sequence[B]
    left_ob: Callable[[A], B]
    left_mor: Callable[[Any], Any]
    right_ob: Callable[[B], A]
    right_mor: Callable[[Any], Any]
    left_hom: Callable[[A, A], List[Any]]
    right_hom: Callable[[B, B], List[Any]]
    left_compose: Callable[[Any, Any], Any]
    right_compose: Callable[[Any, Any], Any]
    left_identity: Callable[[A], Any]
    right_identity: Callable[[B], Any]
    unit: Callable[[A], Any]
    counit: Optional[Callable[[B], Any]] = None

    def transpose(self, a: A, g: Any) -> Any:
        """``g: left(a) -> b`` goes to ``right(g)∘η_a: a -> right(b)``."""
        return self.left_compose(self.right_mor(g), self.unit(a))


def _label(value: Any) -> str:
    return getattr(value, "name", str(value))


def verify_adjunction(adj: Adjunction) -> bool:
    """
    Check the hom-set bijection on the windows.

    For every window pair ``(a, b)``: the counts of
    ``Hom(left a, b)`` and ``Hom(a, right b)`` agree, transposition is
    injective onto the latter, and it is natural in a and in b.

    Raises:
        BijectiveFailure: naming the pair and the failed property
    """
    for a in adj.left_objects:
        la = adj.left_ob(a)
        for b in adj.right_objects:
            rb = adj.right_ob(b)
            upstairs = adj.right_hom(la, b)
            downstairs = adj.left_hom(a, rb)
            witness = (_label(a), _label(b))
            if len(upstairs) != len(downstairs):
                raise BijectiveFailure(
                    adj.name, witness, f"count {len(upstairs)} != {len(downstairs)}"
                )
            images = [adj.transpose(a, g) for g in upstairs]
            if len(set(images)) != len(images) or set(images) != set(downstairs):
                raise BijectiveFailure(adj.name, witness, "transposition is not a bijection")

            for a2 in adj.left_objects:
                for k in adj.left_hom(a2, a):
                    lk = adj.left_mor(k)
                    for g in upstairs:
                        if adj.transpose(a2, adj.right_compose(g, lk)) != adj.left_compose(
                            adj.transpose(a, g), k
                        ):
                            raise BijectiveFailure(
                                adj.name, (_label(a2), _label(b)), "not natural in the left variable"
                            )
            for b2 in adj.right_objects:
                for h in adj.right_hom(b, b2):
                    rh = adj.right_mor(h)
                    for g in upstairs:
                        if adj.transpose(a, adj.right_compose(h, g)) != adj.left_compose(
                            rh, adj.transpose(a, g)
                        ):
                            raise BijectiveFailure(
                                adj.name, (_label(a), _label(b2)), "not natural in the right variable"
                            )
    logger.debug(f"{adj.name}: bijection verified on {len(adj.left_objects)}x{len(adj.right_objects)}")
    return True


def verify_triangle_identities(adj: Adjunction) -> bool:
    """
    ``ε_{La}∘L(η_a) = id`` and ``R(ε_b)∘η_{Rb} = id`` on the windows.

    Raises:
        BijectiveFailure: on the first failing object
    """
    if adj.counit is None:
        raise BijectiveFailure(adj.name, (), "no counit given")
    for a in adj.left_objects:
        la = adj.left_ob(a)
        if adj.right_compose(adj.counit(la), adj.left_mor(adj.unit(a))) != adj.right_identity(la):
            raise BijectiveFailure(adj.name, (_label(a),), "left triangle identity")
    for b in adj.right_objects:
        rb = adj.right_ob(b)
        if adj.left_compose(adj.right_mor(adj.counit(b)), adj.unit(rb)) != adj.left_identity(rb):
            raise BijectiveFailure(adj.name, (_label(b),), "right triangle identity")
    return True


# ============================================================================
# THE ADJOINT CHAIN L ⊣ U ⊣ R
# ============================================================================


def l_adjunction(x: FinCategory, categories: Sequence[FinCategory], objects: Sequence[LaxObject]) -> Adjunction:
    """``L ⊣ U`` between a window of Cat and a window of Cat//X."""
    return Adjunction(
        name="L -| U",
        left_objects=list(categories),
        right_objects=list(objects),
        left_ob=lambda w: L(x, w),
        left_mor=lambda f: L(x, f),
        right_ob=lambda o: o.base,
        right_mor=lambda m: m.functor,
        left_hom=enumerate_functors,
        right_hom=enumerate_lax_hom,
        left_compose=compose_functors,
        right_compose=compose_lax,
        left_identity=identity_functor,
        right_identity=identity_lax,
        unit=identity_functor,
        counit=iota,
    )


def r_adjunction(x: FinCategory, objects: Sequence[LaxObject], categories: Sequence[FinCategory]) -> Adjunction:
    """``U ⊣ R`` between a window of Cat//X and a window of Cat."""
    return Adjunction(
        name="U -| R",
        left_objects=list(objects),
        right_objects=list(categories),
        left_ob=lambda o: o.base,
        left_mor=lambda m: m.functor,
        right_ob=lambda w: R(x, w),
        right_mor=lambda f: R(x, f),
        left_hom=enumerate_lax_hom,
        right_hom=enumerate_functors,
        left_compose=compose_lax,
        right_compose=compose_functors,
        left_identity=identity_lax,
        right_identity=identity_functor,
        unit=tau,
        counit=identity_functor,
    )


# ============================================================================
# ISOMORPHISMS IN Cat//X
# ============================================================================


def find_lax_isomorphism(first: LaxObject, second: LaxObject) -> Optional[LaxMorphism]:
    """
    An isomorphism ``first -> second`` in Cat//X, or None.

    ``(f, γ)`` is invertible iff f is an isomorphism of categories and
    every component of γ is invertible.
    """
    if first.base.size != second.base.size:
        return None
    if find_isomorphism(first.base, second.base) is None:
        return None
    x = first.workspace
    for m in enumerate_lax_hom(first, second):
        if len(set(m.functor.omap.values())) != len(first.base.objects):
            continue
        if len(set(m.functor.mmap.values())) != len(first.base.morphisms):
            continue
        if all(x.is_iso(c) for c in m.cell.components.values()):
            return m
    return None


def lax_isomorphic(first: LaxObject, second: LaxObject) -> bool:
    return find_lax_isomorphism(first, second) is not None
