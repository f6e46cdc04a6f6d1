"""
Canonical `.fcat` serialization.

Output is LF-only and newline-terminated, with a two-space indent for
section headers and a four-space indent for declarations. Documents in
one file are separated by a single blank line.
"""

from typing import Iterable, List, Union

from laxcat.core.types import DocKind
from laxcat.core.utils.naming import identity_name, is_valid_name
from laxcat.fincat.category import FinCategory, composable_pairs
from laxcat.fincat.functor import Functor, NatTrans
from laxcat.presentation.ast import PresentationDoc

INDENT = "  "
DECL_INDENT = "    "

Value = Union[FinCategory, Functor, NatTrans]


def _name(name: str, fallback: str) -> str:
    return name if is_valid_name(name) else fallback


def _section(header: str, lines: List[str]) -> List[str]:
    if not lines:
        return []
    return [f"{INDENT}{header}"] + [f"{DECL_INDENT}{line};" for line in lines]


def _objects_line(names: Iterable[str], header: str = "objects:") -> str:
    return f"{INDENT}{header} " + " ".join(names) + ";"


def _document(header: str, body: List[str]) -> str:
    return "\n".join([header + " {"] + body + ["}"]) + "\n"


# ============================================================================
# VALUES
# ============================================================================


def serialize_category(c: FinCategory) -> str:
    identities = [
        f"{c.identity(x)} : {x}" for x in c.objects if c.identity(x) != identity_name(x)
    ]
    morphisms = [f"{m} : {c.dom(m)} -> {c.cod(m)}" for m in c.non_identities()]
    composites = [
        f"{g} {f} = {c.compose(g, f)}"
        for g, f in composable_pairs(c)
        if not (c.is_identity(g) or c.is_identity(f))
    ]
    body = (
        [_objects_line(c.objects)]
        + _section("identities:", identities)
        + _section("morphisms:", morphisms)
        + _section("compose:", composites)
    )
    return _document(f"category {_name(c.name, 'C')}", body)


def serialize_functor(f: Functor) -> str:
    w = f.source
    objects = [f"{x} = {f.omap[x]}" for x in w.objects]
    morphisms = [f"{m} = {f.mmap[m]}" for m in w.non_identities()]
    header = (
        f"functor {_name(f.name, 'F')} : {_name(w.name, 'C')} -> {_name(f.target.name, 'D')}"
    )
    return _document(header, _section("objects:", objects) + _section("morphisms:", morphisms))


def serialize_nat_trans(alpha: NatTrans) -> str:
    components = [f"{x} = {alpha.components[x]}" for x in alpha.shape.objects]
    header = (
        f"nattrans {_name(alpha.name, 'alpha')} : "
        f"{_name(alpha.source.name, 'F')} => {_name(alpha.target.name, 'G')}"
    )
    return _document(header, _section("components:", components))


def serialize(value: Value) -> str:
    """
    Canonical text of a category, functor or transformation.

    Categories list non-default identity names, non-identity morphisms
    and non-identity composites; functors list non-identity morphism
    images. Declarations follow declaration order.
    """
    if isinstance(value, FinCategory):
        return serialize_category(value)
    if isinstance(value, Functor):
        return serialize_functor(value)
    if isinstance(value, NatTrans):
        return serialize_nat_trans(value)
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def dumps(values: Iterable[Value]) -> str:
    """Serialize several values into one file text."""
    return "\n".join(serialize(v) for v in values)


# ============================================================================
# DOCUMENTS
# ============================================================================


def serialize_doc(doc: PresentationDoc) -> str:
    """Print a parsed document back, section by section, as written."""
    body = doc.body
    name = doc.name.text
    if doc.kind == DocKind.CATEGORY:
        lines = (
            [_objects_line(o.text for o in body.objects)]
            + _section("identities:", [f"{t.name} : {t.obj}" for t in body.identities])
            + _section("morphisms:", [f"{a.name} : {a.dom} -> {a.cod}" for a in body.morphisms])
            + _section("compose:", [f"{c.g} {c.f} = {c.result}" for c in body.composites])
        )
        return _document(f"category {name}", lines)
    if doc.kind == DocKind.POSET:
        lines = [_objects_line((e.text for e in body.elements), "elements:")] if body.elements else []
        lines += [INDENT + " <= ".join(n.text for n in chain) + ";" for chain in body.chains]
        return _document(f"poset {name}", lines)
    if doc.kind == DocKind.FREEACYCLIC:
        lines = [_objects_line(o.text for o in body.objects)] + _section(
            "edges:", [f"{e.name} : {e.dom} -> {e.cod}" for e in body.edges]
        )
        return _document(f"freeacyclic {name}", lines)
    if doc.kind == DocKind.FUNCTOR:
        lines = _section("objects:", [f"{a.left} = {a.right}" for a in body.objects]) + _section(
            "morphisms:", [f"{a.left} = {a.right}" for a in body.morphisms]
        )
        return _document(f"functor {name} : {doc.source} -> {doc.target}", lines)
    lines = _section("components:", [f"{a.left} = {a.right}" for a in body.components])
    return _document(f"nattrans {name} : {doc.source} => {doc.target}", lines)


def dumps_docs(docs: Iterable[PresentationDoc]) -> str:
    return "\n".join(serialize_doc(d) for d in docs)
