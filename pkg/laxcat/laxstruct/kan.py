"""
Pointwise left Kan extensions and mates.

``lan_f a`` at ``y`` is the colimit of ``a∘P`` over the comma category
``f↓y``; its action on morphisms and the unit come from colimit
mediators. The mate of ``φ: a => b∘j`` is the transpose
``lan_j a => b`` under ``lan_j ⊣ (-)∘j``.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Sequence

from laxcat.core.exceptions import MissingColimit, ShapeMismatch
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.constructions import Comma, comma_over
from laxcat.fincat.enumerate import enumerate_nat_trans
from laxcat.fincat.functor import (
    Functor,
    NatTrans,
    compose_functors,
    identity_nat_trans,
    vertical_compose,
    whisker_right,
)
from laxcat.laxcomma.adjunction import Adjunction
from laxcat.laxcomma.objects import LaxMorphism, LaxObject, lax_morphism
from laxcat.univprop.diagram import Cocone, Diagram, find_colimit, is_colimit, mediate_colimit

logger = get_logger(__name__)


@dataclass(frozen=True)
class Certificate:
    """The comma-shaped colimit that computes one value of an extension."""

    comma: Comma
    diagram: Diagram
    cocone: Cocone

    def leg(self, w: str, h: str) -> str:
        return self.cocone.legs[self.comma.category.tagged_object((w, h))]

    def check(self) -> bool:
        return is_colimit(self.diagram, self.cocone)


@dataclass(frozen=True)
class LanResult:
    """
    ``lan_f a`` with its unit ``a => lan_f a ∘ f``.

    Attributes:
        along: f: W -> Y
        base: a: W -> X
        extension: Y -> X
        unit: a => extension∘f
        certificates: y -> the colimit computing ``extension(y)``
    """

    along: Functor
    base: Functor
    extension: Functor
    unit: NatTrans
    certificates: Dict[str, Certificate]


def _mediator(cert: Certificate, legs: Dict[str, str], apex: str, y: str) -> str:
    m = mediate_colimit(cert.diagram, cert.cocone, Cocone(apex, legs))
    if m is None:
        raise MissingColimit(y)
    return m


@lru_cache(maxsize=1024)
def left_kan(f: Functor, a: Functor) -> LanResult:
    """
    The pointwise left Kan extension of a along f.

    Raises:
        ShapeMismatch: if f and a have different sources
        MissingColimit: naming the first y whose comma colimit is missing
    """
    if f.source != a.source:
        raise ShapeMismatch(f.source.name, a.source.name)
    y, x = f.target, a.target
    certificates: Dict[str, Certificate] = {}
    for obj in y.objects:
        comma = comma_over(f, obj)
        diagram = Diagram.of(compose_functors(a, comma.projection, name=f"D_{obj}"))
        cocone = find_colimit(diagram)
        if cocone is None:
            raise MissingColimit(obj)
        certificates[obj] = Certificate(comma, diagram, cocone)

    mmap: Dict[str, str] = {}
    for v in y.morphisms:
        source, target = certificates[y.dom(v)], certificates[y.cod(v)]
        legs = {}
        for name in source.comma.category.objects:
            w, h = source.comma.category.object_tag(name)
            legs[name] = target.leg(w, y.compose(v, h))
        mmap[v] = _mediator(source, legs, target.cocone.apex, y.dom(v))
    extension = Functor(
        y, x, {obj: c.cocone.apex for obj, c in certificates.items()}, mmap, name=f"Lan_{f.name}{a.name}"
    )
    unit = NatTrans(
        a,
        compose_functors(extension, f),
        {w: certificates[f.omap[w]].leg(w, y.identity(f.omap[w])) for w in f.source.objects},
        name=f"eta_{f.name}{a.name}",
    )
    logger.debug(f"Lan along {f.name} of {a.name}: {extension.omap}")
    return LanResult(f, a, extension, unit, certificates)


def lan_map(source: LanResult, target: LanResult, alpha: NatTrans) -> NatTrans:
    """
    ``lan_f α: lan_f a => lan_f a'`` for ``α: a => a'``.

    Raises:
        ShapeMismatch: if the extensions are along different functors or
            α does not go from ``source.base`` to ``target.base``
    """
    if source.along != target.along:
        raise ShapeMismatch(source.along.name, target.along.name)
    if alpha.source != source.base or alpha.target != target.base:
        raise ShapeMismatch(f"{source.base.name} => {target.base.name}", alpha.name)
    x = source.base.target
    components = {}
    for y, cert in source.certificates.items():
        other = target.certificates[y]
        legs = {}
        for name in cert.comma.category.objects:
            w, _ = cert.comma.category.object_tag(name)
            legs[name] = x.compose(other.cocone.legs[name], alpha.components[w])
        components[y] = _mediator(cert, legs, other.cocone.apex, y)
    return NatTrans(source.extension, target.extension, components, name=f"Lan({alpha.name})")


# ============================================================================
# MATES
# ============================================================================


@dataclass(frozen=True)
class MateCell:
    """``φ: a => b∘j`` together with its transpose ``lan_j a => b``."""

    phi: NatTrans
    lan: LanResult
    b: Functor
    mate: NatTrans

    def restrict(self) -> NatTrans:
        """``(mate*j)·unit``; equals ``phi`` for a genuine mate."""
        return vertical_compose(whisker_right(self.mate, self.lan.along), self.lan.unit)

    def check(self) -> bool:
        return self.restrict() == self.phi


def mate(phi: NatTrans, lan: LanResult, b: Functor) -> MateCell:
    """
    The transpose of ``φ: a => b∘j`` through ``lan = lan_j a``.

    At y it is the mediator of the cocone ``(w, h) ↦ b(h)∘φ_w``.

    Raises:
        ShapeMismatch: if φ does not go from ``lan.base`` to ``b∘j``
    """
    if phi.source != lan.base:
        raise ShapeMismatch(lan.base.name, phi.source.name)
    if phi.target != compose_functors(b, lan.along):
        raise ShapeMismatch(f"{b.name}{lan.along.name}", phi.target.name)
    x = b.target
    components = {}
    for y, cert in lan.certificates.items():
        legs = {}
        for name in cert.comma.category.objects:
            w, h = cert.comma.category.object_tag(name)
            legs[name] = x.compose(b.mmap[h], phi.components[w])
        components[y] = _mediator(cert, legs, b.omap[y], y)
    transpose = NatTrans(lan.extension, b, components, name=f"{phi.name}^t")
    return MateCell(phi, lan, b, transpose)


def lan_counit(f: Functor, b: Functor) -> NatTrans:
    """The counit ``lan_f(b∘f) => b``: the mate of the identity."""
    restricted = compose_functors(b, f)
    return mate(identity_nat_trans(restricted), left_kan(f, restricted), b).mate


def opcartesian_lift(o: LaxObject, f: Functor) -> LaxMorphism:
    """``(f, unit): (W, a) -> (Y, lan_f a)``."""
    lan = left_kan(f, o.structure)
    cod = LaxObject(f.target, lan.extension, name=f"Lan_{f.name}{o.name}")
    return lax_morphism(o, cod, f, lan.unit.components, name=f"oplift_{f.name}")


def lan_adjunction(f: Functor, sources: Sequence[Functor], targets: Sequence[Functor]) -> Adjunction:
    """
    ``lan_f ⊣ (-)∘f`` on windows of ``Cat[W, X]`` and ``Cat[Y, X]``.

    Pass it to :func:`verify_adjunction` for the counting form
    ``|Nat(lan_f a, b)| = |Nat(a, b∘f)|`` and naturality.
    """
    return Adjunction(
        name=f"Lan_{f.name} -| restriction",
        left_objects=list(sources),
        right_objects=list(targets),
        left_ob=lambda a: left_kan(f, a).extension,
        left_mor=lambda alpha: lan_map(left_kan(f, alpha.source), left_kan(f, alpha.target), alpha),
        right_ob=lambda b: compose_functors(b, f),
        right_mor=lambda beta: whisker_right(beta, f),
        left_hom=enumerate_nat_trans,
        right_hom=enumerate_nat_trans,
        left_compose=vertical_compose,
        right_compose=vertical_compose,
        left_identity=identity_nat_trans,
        right_identity=identity_nat_trans,
        unit=lambda a: left_kan(f, a).unit,
        counit=lambda b: lan_counit(f, b),
    )
