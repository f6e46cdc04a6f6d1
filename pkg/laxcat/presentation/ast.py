"""
Syntax tree of `.fcat` documents.

Every node records where it was written. Positions are excluded from
equality, so two documents that differ only in layout compare equal.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from laxcat.core.types import DocKind


@dataclass(frozen=True)
class Name:
    """A name as written, with its 1-based source position."""

    text: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Arrow:
    """``name : dom -> cod``."""

    name: Name
    dom: Name
    cod: Name


@dataclass(frozen=True)
class Typing:
    """``name : obj`` (an identity declaration)."""

    name: Name
    obj: Name


@dataclass(frozen=True)
class Composite:
    """``g f = h``, read g after f."""

    g: Name
    f: Name
    result: Name


@dataclass(frozen=True)
class Assignment:
    """``left = right`` in functor and transformation bodies."""

    left: Name
    right: Name


# ============================================================================
# BODIES
# ============================================================================


@dataclass(frozen=True)
class CategoryBody:
    objects: Tuple[Name, ...] = ()
    identities: Tuple[Typing, ...] = ()
    morphisms: Tuple[Arrow, ...] = ()
    composites: Tuple[Composite, ...] = ()


@dataclass(frozen=True)
class PosetBody:
    """Optional element list plus chains ``a <= b <= c``."""

    elements: Tuple[Name, ...] = ()
    chains: Tuple[Tuple[Name, ...], ...] = ()

    def element_names(self) -> List[str]:
        """Elements in order of first appearance."""
        seen: List[str] = []
        for name in list(self.elements) + [n for chain in self.chains for n in chain]:
            if name.text not in seen:
                seen.append(name.text)
        return seen

    def pairs(self) -> List[Tuple[Name, Name]]:
        """Generating pairs, one per ``<=`` written."""
        return [(c[i], c[i + 1]) for c in self.chains for i in range(len(c) - 1)]


@dataclass(frozen=True)
class FreeAcyclicBody:
    objects: Tuple[Name, ...] = ()
    edges: Tuple[Arrow, ...] = ()


@dataclass(frozen=True)
class FunctorBody:
    objects: Tuple[Assignment, ...] = ()
    morphisms: Tuple[Assignment, ...] = ()


@dataclass(frozen=True)
class NatTransBody:
    components: Tuple[Assignment, ...] = ()


Body = Union[CategoryBody, PosetBody, FreeAcyclicBody, FunctorBody, NatTransBody]


@dataclass(frozen=True)
class PresentationDoc:
    """
    One parsed document.

    Attributes:
        kind: Document kind
        name: Declared name
        body: Kind-specific declarations
        source: Source category (functor) or functor (nattrans)
        target: Target category (functor) or functor (nattrans)
    """

    kind: DocKind
    name: Name
    body: Body
    source: Optional[Name] = None
    target: Optional[Name] = None

    @property
    def line(self) -> int:
        return self.name.line

    @property
    def col(self) -> int:
        return self.name.col
