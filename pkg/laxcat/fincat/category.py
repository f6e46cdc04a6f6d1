"""
Finite categories.

A :class:`FinCategory` is an immutable value: ordered objects, ordered
morphisms with domains and codomains, an identity per object and a
composition table over composable pairs. Construction is cheap and
trusting; :func:`validate_category` and :func:`check_category_laws`
perform the exhaustive law checks.
"""

from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import pandas as pd

from laxcat.core.exceptions import (
    AssociativityViolation,
    CategoryError,
    IdentityLawViolation,
    NonTotalComposition,
    ObjectNotFound,
    SizeLimitExceeded,
)
from laxcat.core.models import RawCategory
from laxcat.core.settings import get_limits
from laxcat.core.utils.logger import get_logger
from laxcat.core.utils.naming import identity_name

logger = get_logger(__name__)

MorphismDecl = Tuple[str, str, str]


class FinCategory:
    """
    A finite category.

    Args:
        name: Display name (not part of equality)
        objects: Object names in declaration order
        morphisms: ``(name, dom, cod)`` triples in declaration order,
            identities included
        identities: Object -> identity morphism
        table: ``(g, f) -> g∘f`` over composable pairs
        object_tags: Optional provenance of constructed object names,
            e.g. ``("pair", "a", "b") -> "(a,b)"``
        morphism_tags: Same for morphisms
    """

    __slots__ = (
        "name",
        "objects",
        "morphisms",
        "_dom",
        "_cod",
        "_identities",
        "_identity_set",
        "_table",
        "_hom",
        "_out",
        "_obj_index",
        "_mor_index",
        "_object_tags",
        "_morphism_tags",
        "_object_tag_of",
        "_morphism_tag_of",
        "_key",
        "_hash",
    )

    def __init__(
        self,
        name: str,
        objects: Sequence[str],
        morphisms: Sequence[MorphismDecl],
        identities: Mapping[str, str],
        table: Mapping[Tuple[str, str], str],
        object_tags: Optional[Mapping[Hashable, str]] = None,
        morphism_tags: Optional[Mapping[Hashable, str]] = None,
    ):
        self.name = name
        self.objects: Tuple[str, ...] = tuple(objects)
        self.morphisms: Tuple[str, ...] = tuple(m for m, _, _ in morphisms)

        self._obj_index = {x: i for i, x in enumerate(self.objects)}
        if len(self._obj_index) != len(self.objects):
            raise CategoryError("Duplicate object name", category=name)
        self._mor_index = {m: i for i, m in enumerate(self.morphisms)}
        if len(self._mor_index) != len(self.morphisms):
            raise CategoryError("Duplicate morphism name", category=name)

        self._dom: Dict[str, str] = {}
        self._cod: Dict[str, str] = {}
        self._hom: Dict[Tuple[str, str], List[str]] = {}
        self._out: Dict[str, List[str]] = {x: [] for x in self.objects}
        for m, d, c in morphisms:
            for end in (d, c):
                if end not in self._obj_index:
                    raise ObjectNotFound(end, category=name)
            self._dom[m] = d
            self._cod[m] = c
            self._hom.setdefault((d, c), []).append(m)
            self._out[d].append(m)

        self._identities = dict(identities)
        for x in self.objects:
            i = self._identities.get(x)
            if i is None or i not in self._dom:
                raise CategoryError(f"Object '{x}' has no identity", category=name)
            if self._dom[i] != x or self._cod[i] != x:
                raise CategoryError(
                    f"Identity '{i}' of '{x}' is not an endomorphism of it",
                    category=name,
                )
        self._identity_set = frozenset(self._identities.values())
        self._table: Dict[Tuple[str, str], str] = dict(table)

        self._object_tags = dict(object_tags or {})
        self._morphism_tags = dict(morphism_tags or {})
        self._object_tag_of = {v: k for k, v in self._object_tags.items()}
        self._morphism_tag_of = {v: k for k, v in self._morphism_tags.items()}

        self._key = (
            self.objects,
            tuple((m, self._dom[m], self._cod[m]) for m in self.morphisms),
            tuple(self._identities[x] for x in self.objects),
            tuple(sorted(self._table.items())),
        )
        self._hash = hash(self._key)

    # ------------------------------------------------------------------
    # structure
    # ------------------------------------------------------------------

    def dom(self, f: str) -> str:
        try:
            return self._dom[f]
        except KeyError:
            raise ObjectNotFound(f, category=self.name, kind="morphism") from None

    def cod(self, f: str) -> str:
        try:
            return self._cod[f]
        except KeyError:
            raise ObjectNotFound(f, category=self.name, kind="morphism") from None

    def identity(self, x: str) -> str:
        try:
            return self._identities[x]
        except KeyError:
            raise ObjectNotFound(x, category=self.name) from None

    def compose(self, g: str, f: str) -> str:
        """Return ``g∘f`` (first f, then g)."""
        try:
            return self._table[(g, f)]
        except KeyError:
            raise NonTotalComposition(g, f, category=self.name) from None

    def compose_path(self, *morphisms: str) -> str:
        """Compose in applicative order: ``compose_path(h, g, f) = h∘g∘f``."""
        result = morphisms[-1]
        for g in reversed(morphisms[:-1]):
            result = self.compose(g, result)
        return result

    def hom(self, x: str, y: str) -> Tuple[str, ...]:
        return tuple(self._hom.get((x, y), ()))

    def out_of(self, x: str) -> Tuple[str, ...]:
        """Morphisms with domain x, in declaration order."""
        return tuple(self._out[x])

    def has_object(self, x: str) -> bool:
        return x in self._obj_index

    def has_morphism(self, f: str) -> bool:
        return f in self._mor_index

    def require_object(self, x: str) -> str:
        if x not in self._obj_index:
            raise ObjectNotFound(x, category=self.name)
        return x

    def is_identity(self, f: str) -> bool:
        return f in self._identity_set

    def non_identities(self) -> Tuple[str, ...]:
        return tuple(m for m in self.morphisms if m not in self._identity_set)

    def object_index(self, x: str) -> int:
        return self._obj_index[x]

    def morphism_index(self, f: str) -> int:
        return self._mor_index[f]

    @property
    def identities(self) -> Dict[str, str]:
        return dict(self._identities)

    @property
    def table(self) -> Dict[Tuple[str, str], str]:
        return dict(self._table)

    def declarations(self) -> List[MorphismDecl]:
        return [(m, self._dom[m], self._cod[m]) for m in self.morphisms]

    def renamed(self, name: str) -> "FinCategory":
        return FinCategory(
            name,
            self.objects,
            self.declarations(),
            self._identities,
            self._table,
            object_tags=self._object_tags,
            morphism_tags=self._morphism_tags,
        )

    # ------------------------------------------------------------------
    # isomorphisms and shape
    # ------------------------------------------------------------------

    def inverse(self, f: str) -> Optional[str]:
        """The inverse of f, or None when f is not invertible."""
        d, c = self._dom[f], self._cod[f]
        for g in self.hom(c, d):
            if self.compose(g, f) == self._identities[d] and self.compose(
                f, g
            ) == self._identities[c]:
                return g
        return None

    def is_iso(self, f: str) -> bool:
        return self.inverse(f) is not None

    def isomorphisms(self, x: str, y: str) -> Tuple[str, ...]:
        return tuple(f for f in self.hom(x, y) if self.is_iso(f))

    def is_thin(self) -> bool:
        return all(len(ms) <= 1 for ms in self._hom.values())

    def leq(self, x: str, y: str) -> bool:
        """Preorder reading: there is a morphism x -> y."""
        return bool(self._hom.get((x, y)))

    @property
    def size(self) -> Tuple[int, int]:
        return len(self.objects), len(self.morphisms)

    def hom_counts(self) -> pd.DataFrame:
        """Hom-set sizes as a matrix indexed by domain (rows) and codomain."""
        return pd.DataFrame(
            [[len(self._hom.get((x, y), ())) for y in self.objects] for x in self.objects],
            index=list(self.objects),
            columns=list(self.objects),
        )

    # ------------------------------------------------------------------
    # provenance of constructed names
    # ------------------------------------------------------------------

    def tagged_object(self, tag: Hashable) -> str:
        try:
            return self._object_tags[tag]
        except KeyError:
            raise ObjectNotFound(repr(tag), category=self.name) from None

    def tagged_morphism(self, tag: Hashable) -> str:
        try:
            return self._morphism_tags[tag]
        except KeyError:
            raise ObjectNotFound(repr(tag), category=self.name, kind="morphism") from None

    def object_tag(self, x: str) -> Optional[Hashable]:
        return self._object_tag_of.get(x)

    def morphism_tag(self, f: str) -> Optional[Hashable]:
        return self._morphism_tag_of.get(f)

    # ------------------------------------------------------------------
    # value semantics
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinCategory):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FinCategory({self.name!r}, objects={len(self.objects)}, morphisms={len(self.morphisms)})"


# ============================================================================
# CONSTRUCTION HELPERS
# ============================================================================


def make_category(
    name: str,
    objects: Sequence[str],
    morphisms: Sequence[MorphismDecl],
    composites: Mapping[Tuple[str, str], str],
    identities: Optional[Mapping[str, str]] = None,
    object_tags: Optional[Mapping[Hashable, str]] = None,
    morphism_tags: Optional[Mapping[Hashable, str]] = None,
) -> FinCategory:
    """
    Build a category from non-identity data.

    Identities not listed in ``morphisms`` are created as ``id_<object>``
    and put first among the morphisms of their object, in object order.
    Identity composites are filled in.
    """
    identities = dict(identities or {})
    known = set(objects)
    for _, d, c in morphisms:
        for end in (d, c):
            if end not in known:
                raise ObjectNotFound(end, category=name)
    declared = {m for m, _, _ in morphisms}
    all_morphisms: List[MorphismDecl] = []
    for x in objects:
        i = identities.setdefault(x, identity_name(x))
        if i not in declared:
            all_morphisms.append((i, x, x))
    all_morphisms.extend(morphisms)

    table = dict(composites)
    dom = {m: d for m, d, _ in all_morphisms}
    cod = {m: c for m, _, c in all_morphisms}
    for m, _, _ in all_morphisms:
        table.setdefault((identities[cod[m]], m), m)
        table.setdefault((m, identities[dom[m]]), m)

    return FinCategory(
        name,
        objects,
        all_morphisms,
        identities,
        table,
        object_tags=object_tags,
        morphism_tags=morphism_tags,
    )


def check_size(category: FinCategory, what: Optional[str] = None) -> FinCategory:
    """Apply the configured object/morphism caps to a category."""
    limits = get_limits()
    objects, morphisms = category.size
    label = what or f"category '{category.name}'"
    if objects > limits.max_objects:
        raise SizeLimitExceeded(label, objects, limits.max_objects, "LAXCAT_MAX_OBJECTS")
    if morphisms > limits.max_morphisms:
        raise SizeLimitExceeded(
            label, morphisms, limits.max_morphisms, "LAXCAT_MAX_MORPHISMS"
        )
    return category


# ============================================================================
# VALIDATION
# ============================================================================


def check_category_laws(category: FinCategory) -> FinCategory:
    """
    Re-assert every category law on an existing value.

    Checks, in order: totality of the table on composable pairs (and
    nothing else), the identity laws, typing of composites, associativity.

    Raises:
        NonTotalComposition: Missing, extra or ill-typed table entry
        IdentityLawViolation: An identity is not neutral
        AssociativityViolation: A composable triple disagrees
    """
    c = category
    table = c._table

    for (g, f) in table:
        if not (c.has_morphism(g) and c.has_morphism(f)) or c.cod(f) != c.dom(g):
            raise NonTotalComposition(g, f, category=c.name, reason="defined on a non-composable pair")
    for f in c.morphisms:
        for g in c.out_of(c.cod(f)):
            if (g, f) not in table:
                raise NonTotalComposition(g, f, category=c.name)

    for f in c.morphisms:
        id_cod = c.identity(c.cod(f))
        id_dom = c.identity(c.dom(f))
        if table[(id_cod, f)] != f:
            raise IdentityLawViolation(f, id_cod, category=c.name)
        if table[(f, id_dom)] != f:
            raise IdentityLawViolation(f, id_dom, category=c.name)

    for (g, f), h in table.items():
        if not c.has_morphism(h) or c.dom(h) != c.dom(f) or c.cod(h) != c.cod(g):
            raise NonTotalComposition(g, f, category=c.name, reason=f"ill-typed ('{h}')")

    for f in c.morphisms:
        for g in c.out_of(c.cod(f)):
            gf = table[(g, f)]
            for h in c.out_of(c.cod(g)):
                if table[(h, gf)] != table[(table[(h, g)], f)]:
                    raise AssociativityViolation(h, g, f, category=c.name)

    return category


def validate_category(raw: Union[RawCategory, Mapping, FinCategory]) -> FinCategory:
    """
    Validate raw category data.

    Args:
        raw: A :class:`RawCategory`, a dict with the same fields, or an
            existing category to re-check.

    Returns:
        The validated :class:`FinCategory`

    Raises:
        NonTotalComposition, IdentityLawViolation, AssociativityViolation,
        ObjectNotFound, SizeLimitExceeded
    """
    if isinstance(raw, FinCategory):
        category = raw
    else:
        if not isinstance(raw, RawCategory):
            raw = RawCategory.model_validate(raw)
        category = make_category(
            raw.name,
            raw.objects,
            [(m.name, m.dom, m.cod) for m in raw.morphisms],
            {(e.g, e.f): e.result for e in raw.composites},
            identities=raw.identities,
        )
    check_size(category)
    check_category_laws(category)
    logger.debug(f"Validated {category!r}")
    return category


def categories_equal_up_to_order(a: FinCategory, b: FinCategory) -> bool:
    """Name-based equality ignoring declaration order."""
    return (
        set(a.objects) == set(b.objects)
        and set(a.declarations()) == set(b.declarations())
        and a.identities == b.identities
        and a.table == b.table
    )


def composable_pairs(category: FinCategory) -> Iterable[Tuple[str, str]]:
    """All ``(g, f)`` with ``cod f = dom g`` in canonical order."""
    for f in category.morphisms:
        for g in category.out_of(category.cod(f)):
            yield g, f
