"""
Objects, morphisms and 2-cells of the lax comma category Cat//X.

An object is a pair ``(W, a: W -> X)``; a morphism ``(W, a) -> (Y, b)``
is a pair ``(f, γ)`` of a functor ``f: W -> Y`` and a transformation
``γ: a => b∘f``. The workspace category X is the common target of all
structure functors.
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Mapping, Union

from laxcat.core.exceptions import NotComposable, NotParallel, ShapeMismatch
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.enumerate import guarded, iter_functors, iter_nat_trans
from laxcat.fincat.functor import (
    Functor,
    NatTrans,
    compose_functors,
    identity_functor,
    identity_nat_trans,
    validate_functor,
    validate_nat_trans,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class LaxObject:
    """
    An object ``(W, a)`` of Cat//X.

    Args:
        base: The category W
        structure: The functor ``a: W -> X``
        name: Display name (not part of equality)
    """

    base: FinCategory
    structure: Functor
    name: str = field(default="o", compare=False)

    def __post_init__(self):
        if self.structure.source != self.base:
            raise ShapeMismatch(self.base.name, self.structure.source.name)

    @property
    def workspace(self) -> FinCategory:
        return self.structure.target

    def at(self, w: str) -> str:
        """The value ``a(w)``."""
        return self.structure.omap[w]

    def __repr__(self) -> str:
        return f"LaxObject({self.name!r}: {self.base.name} -> {self.workspace.name})"


@dataclass(frozen=True)
class LaxMorphism:
    """
    A morphism ``(f, γ): (W, a) -> (Y, b)``.

    ``cell`` goes from ``a`` to ``b∘f``.
    """

    dom: LaxObject
    cod: LaxObject
    functor: Functor
    cell: NatTrans
    name: str = field(default="m", compare=False)

    def __post_init__(self):
        if self.functor.source != self.dom.base or self.functor.target != self.cod.base:
            raise ShapeMismatch(
                f"{self.dom.base.name} -> {self.cod.base.name}",
                f"{self.functor.source.name} -> {self.functor.target.name}",
            )
        if self.cell.source != self.dom.structure:
            raise ShapeMismatch(self.dom.structure.name, self.cell.source.name)
        if self.cell.target != compose_functors(self.cod.structure, self.functor):
            raise ShapeMismatch(f"{self.cod.structure.name}∘{self.functor.name}", self.cell.target.name)

    def component(self, w: str) -> str:
        return self.cell.components[w]

    def __repr__(self) -> str:
        return f"LaxMorphism({self.name!r}: {self.dom.name} -> {self.cod.name})"


@dataclass(frozen=True)
class LaxTwoCell:
    """A 2-cell ``ζ: (f, γ) => (f', γ')`` given by ``ζ: f => f'``."""

    dom: LaxMorphism
    cod: LaxMorphism
    cell: NatTrans


LaxValue = Union[LaxObject, LaxMorphism, LaxTwoCell]


# ============================================================================
# CONSTRUCTORS
# ============================================================================


def lax_object(base: FinCategory, structure: Functor, name: str = "o") -> LaxObject:
    """Build an object, validating its structure functor."""
    validate_functor(structure)
    return LaxObject(base, structure, name=name)


def lax_morphism(
    dom: LaxObject,
    cod: LaxObject,
    functor: Functor,
    components: Mapping[str, str],
    name: str = "m",
) -> LaxMorphism:
    """Build ``(f, γ)`` from the components of γ, validating naturality."""
    target = compose_functors(cod.structure, functor)
    cell = validate_nat_trans(NatTrans(dom.structure, target, components, name=f"gamma_{name}"))
    return LaxMorphism(dom, cod, functor, cell, name=name)


def strict_morphism(dom: LaxObject, cod: LaxObject, functor: Functor, name: str = "m") -> LaxMorphism:
    """``(f, id)``; requires ``a = b∘f`` on the nose."""
    x = dom.workspace
    return lax_morphism(
        dom, cod, functor, {w: x.identity(dom.at(w)) for w in dom.base.objects}, name=name
    )


# ============================================================================
# CATEGORY STRUCTURE
# ============================================================================


def identity_lax(o: LaxObject) -> LaxMorphism:
    """``(id_W, id_a)``."""
    return LaxMorphism(
        o,
        o,
        identity_functor(o.base),
        identity_nat_trans(o.structure).renamed(f"id_{o.structure.name}"),
        name=f"id_{o.name}",
    )


def compose_lax(g: LaxMorphism, f: LaxMorphism) -> LaxMorphism:
    """
    ``(g, χ)∘(f, γ) = (g∘f, (χ*f)·γ)``.

    The composite cell has components ``χ_{f(w)}∘γ_w``.

    Raises:
        NotComposable: if ``f.cod != g.dom``
    """
    if f.cod != g.dom:
        raise NotComposable(g.name, f.name)
    x = f.dom.workspace
    functor = compose_functors(g.functor, f.functor)
    components = {
        w: x.compose(g.cell.components[f.functor.omap[w]], f.cell.components[w])
        for w in f.dom.base.objects
    }
    cell = NatTrans(
        f.dom.structure,
        compose_functors(g.cod.structure, functor),
        components,
        name=f"{g.cell.name}.{f.cell.name}",
    )
    return LaxMorphism(f.dom, g.cod, functor, cell, name=f"{g.name}{f.name}")


def is_strict(m: LaxMorphism) -> bool:
    """True iff every component of the cell is an identity."""
    x = m.dom.workspace
    return all(x.is_identity(c) for c in m.cell.components.values())


def iter_lax_hom(dom: LaxObject, cod: LaxObject) -> Iterator[LaxMorphism]:
    for functor in iter_functors(dom.base, cod.base):
        target = compose_functors(cod.structure, functor)
        for gamma in iter_nat_trans(dom.structure, target):
            yield LaxMorphism(dom, cod, functor, gamma)


def enumerate_lax_hom(dom: LaxObject, cod: LaxObject) -> List[LaxMorphism]:
    """
    All morphisms ``dom -> cod``: for each functor f in canonical order,
    every ``γ: a => b∘f`` in canonical order.

    Raises:
        SizeLimitExceeded: above the configured enumeration limit
    """
    return guarded(iter_lax_hom(dom, cod), f"lax morphisms {dom.name} -> {cod.name}")


# ============================================================================
# 2-CELLS
# ============================================================================


def two_cell_check(z: LaxTwoCell) -> bool:
    """
    Check the pasting equation ``b(ζ_w)∘γ_w = γ'_w`` for every w.

    Raises:
        NotParallel: if the two morphisms are not parallel, or ζ does not
            go between their functors
    """
    first, second = z.dom, z.cod
    if first.dom != second.dom or first.cod != second.cod:
        raise NotParallel(first.name, second.name)
    if z.cell.source != first.functor or z.cell.target != second.functor:
        raise NotParallel(first.functor.name, second.functor.name)
    x = first.dom.workspace
    b = first.cod.structure
    return all(
        x.compose(b.mmap[z.cell.components[w]], first.cell.components[w])
        == second.cell.components[w]
        for w in first.dom.base.objects
    )


def enumerate_two_cells(first: LaxMorphism, second: LaxMorphism) -> List[LaxTwoCell]:
    """Every 2-cell ``first => second``."""
    result = []
    for zeta in iter_nat_trans(first.functor, second.functor):
        candidate = LaxTwoCell(first, second, zeta)
        if two_cell_check(candidate):
            result.append(candidate)
    return result


# ============================================================================
# THE FIBRATION U
# ============================================================================


def U(value):
    """
    Forget the structure: ``(W, a) ↦ W``, ``(f, γ) ↦ f``, ``ζ ↦ ζ``.
    """
    if isinstance(value, LaxObject):
        return value.base
    if isinstance(value, LaxMorphism):
        return value.functor
    if isinstance(value, LaxTwoCell):
        return value.cell
    raise TypeError(f"U is not defined on {type(value).__name__}")
