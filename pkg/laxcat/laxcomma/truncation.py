"""
Finite windows into Cat//X.

A :class:`Truncation` lists finitely many objects and takes every
morphism between them, so hom-sets inside the window are complete and
only the quantification over objects is restricted. Its
:attr:`Truncation.category` is an ordinary :class:`FinCategory` on which
the universal-property oracles run unchanged.
"""

from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from laxcat.core.exceptions import ObjectNotFound
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory, check_category_laws
from laxcat.laxcomma.objects import (
    LaxMorphism,
    LaxObject,
    compose_lax,
    enumerate_lax_hom,
    identity_lax,
    is_strict,
)

logger = get_logger(__name__)


class Truncation:
    """
    The full sub-hom-structure of Cat//X on a list of objects.

    Objects equal to an earlier one are dropped. Window objects are named
    ``o<i>``; morphisms ``m<i>_<j>_<k>`` (the k-th morphism ``o<i> -> o<j>``
    in canonical order) except identities, named ``id_o<i>``.

    Args:
        objects: Objects of Cat//X, in window order
        name: Display name of the window category
    """

    def __init__(self, objects: Sequence[LaxObject], name: str = "Window"):
        unique: List[LaxObject] = []
        for o in objects:
            if o not in unique:
                unique.append(o)
        self.objects: Tuple[LaxObject, ...] = tuple(unique)
        self.name = name
        self._homs: Dict[Tuple[int, int], List[LaxMorphism]] = {}

    def __len__(self) -> int:
        return len(self.objects)

    def index(self, o: LaxObject) -> int:
        try:
            return self.objects.index(o)
        except ValueError:
            raise ObjectNotFound(o.name, category=self.name) from None

    def object_name(self, o: LaxObject) -> str:
        return f"o{self.index(o)}"

    def lax_object(self, name: str) -> LaxObject:
        return self.objects[int(name[1:])]

    def hom(self, i: int, j: int) -> List[LaxMorphism]:
        """Every morphism ``objects[i] -> objects[j]`` (cached)."""
        key = (i, j)
        if key not in self._homs:
            self._homs[key] = enumerate_lax_hom(self.objects[i], self.objects[j])
        return self._homs[key]

    def hom_between(self, dom: LaxObject, cod: LaxObject) -> List[LaxMorphism]:
        return self.hom(self.index(dom), self.index(cod))

    # ------------------------------------------------------------------
    # the window as a finite category
    # ------------------------------------------------------------------

    @cached_property
    def _naming(self) -> Tuple[Dict[str, LaxMorphism], Dict[LaxMorphism, str]]:
        by_name: Dict[str, LaxMorphism] = {}
        by_value: Dict[LaxMorphism, str] = {}
        for i, o in enumerate(self.objects):
            ident = identity_lax(o)
            for j in range(len(self.objects)):
                for k, m in enumerate(self.hom(i, j)):
                    label = f"id_o{i}" if i == j and m == ident else f"m{i}_{j}_{k}"
                    by_name[label] = m
                    by_value[m] = label
        return by_name, by_value

    def morphism(self, name: str) -> LaxMorphism:
        return self._naming[0][name]

    def name_of(self, m: LaxMorphism) -> str:
        try:
            return self._naming[1][m]
        except KeyError:
            raise ObjectNotFound(m.name, category=self.name, kind="morphism") from None

    @cached_property
    def category(self) -> FinCategory:
        """The window as a finite category (not size-guarded)."""
        by_name, by_value = self._naming
        objects = [f"o{i}" for i in range(len(self.objects))]
        decls = [
            (label, f"o{self.index(m.dom)}", f"o{self.index(m.cod)}") for label, m in by_name.items()
        ]
        identities = {f"o{i}": f"id_o{i}" for i in range(len(self.objects))}
        outgoing: Dict[int, List[LaxMorphism]] = {}
        for m in by_value:
            outgoing.setdefault(self.index(m.dom), []).append(m)
        table = {}
        for f in by_value:
            for g in outgoing.get(self.index(f.cod), ()):
                table[(by_value[g], by_value[f])] = by_value[compose_lax(g, f)]
        category = FinCategory(self.name, objects, decls, identities, table)
        logger.debug(f"Window {self.name}: {len(objects)} objects, {len(decls)} morphisms")
        return category

    def check_laws(self) -> FinCategory:
        """Re-assert associativity and unit laws of compose_lax on the window."""
        return check_category_laws(self.category)


def strict_subcategory(trunc: Truncation) -> FinCategory:
    """The strict morphisms of a window: the ordinary comma category Cat/X."""
    window = trunc.category
    kept = [m for m in window.morphisms if is_strict(trunc.morphism(m))]
    names = set(kept)
    return FinCategory(
        f"strict({window.name})",
        window.objects,
        [(m, window.dom(m), window.cod(m)) for m in kept],
        window.identities,
        {(g, f): h for (g, f), h in window.table.items() if g in names and f in names},
    )


