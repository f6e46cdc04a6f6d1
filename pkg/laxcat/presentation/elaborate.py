"""
Elaboration of parsed documents into categories, functors and
natural transformations.

Functor and transformation documents refer to other documents by name;
elaboration resolves them in an environment of already elaborated
values, which grows as a file is processed top to bottom.
"""

from collections import deque
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union

from laxcat.core.exceptions import (
    CategoryError,
    CyclicGraph,
    InputFileError,
    InvalidDocument,
    NotAntisymmetric,
    UnknownReference,
)
from laxcat.core.models import CompositeDecl, MorphismDecl, RawCategory
from laxcat.core.types import DocKind
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory, check_size, validate_category
from laxcat.fincat.functor import Functor, NatTrans, validate_functor, validate_nat_trans
from laxcat.fincat.standard import free_category, poset_category
from laxcat.presentation.ast import Name, PresentationDoc
from laxcat.presentation.parser import parse_documents

logger = get_logger(__name__)

Value = Union[FinCategory, Functor, NatTrans]


def _locate(exc: CategoryError, node: Name) -> None:
    exc.details.setdefault("line", node.line)
    exc.details.setdefault("col", node.col)


def _resolve(ref: Name, env: Mapping[str, Value], kind: type, expected: str):
    if ref.text not in env:
        raise UnknownReference(ref.text, ref.line, ref.col)
    value = env[ref.text]
    if not isinstance(value, kind):
        raise InvalidDocument(ref.text, expected, ref.line, ref.col)
    return value


# ============================================================================
# PER KIND
# ============================================================================


def _category(doc: PresentationDoc) -> FinCategory:
    body = doc.body
    raw = RawCategory(
        name=doc.name.text,
        objects=[o.text for o in body.objects],
        morphisms=[MorphismDecl(name=a.name.text, dom=a.dom.text, cod=a.cod.text) for a in body.morphisms],
        identities={t.obj.text: t.name.text for t in body.identities},
        composites=[CompositeDecl(g=c.g.text, f=c.f.text, result=c.result.text) for c in body.composites],
    )
    return validate_category(raw)


def _poset(doc: PresentationDoc) -> FinCategory:
    body = doc.body
    elements = body.element_names()
    leq: Set[Tuple[str, str]] = {(a, a) for a in elements}
    for lo, hi in body.pairs():
        a, b = lo.text, hi.text
        if a != b and (b, a) in leq:
            raise NotAntisymmetric(a, b, hi.line, hi.col)
        below = [x for x in elements if (x, a) in leq]
        above = [y for y in elements if (b, y) in leq]
        leq.update((x, y) for x in below for y in above)
    pairs = [(lo.text, hi.text) for lo, hi in body.pairs()]
    return check_size(poset_category(doc.name.text, elements, pairs))


def _path(edges: Mapping[str, List[str]], start: str, goal: str) -> Optional[List[str]]:
    parents: Dict[str, Optional[str]] = {start: None}
    queue = deque([start])
    while queue:
        at = queue.popleft()
        if at == goal:
            path = [at]
            while parents[path[-1]] is not None:
                path.append(parents[path[-1]])
            return list(reversed(path))
        for nxt in edges.get(at, ()):
            if nxt not in parents:
                parents[nxt] = at
                queue.append(nxt)
    return None


def _freeacyclic(doc: PresentationDoc) -> FinCategory:
    body = doc.body
    successors: Dict[str, List[str]] = {}
    for e in body.edges:
        a, b = e.dom.text, e.cod.text
        back = _path(successors, b, a)
        if back is not None:
            raise CyclicGraph([a] + back, e.name.line, e.name.col)
        successors.setdefault(a, []).append(b)
    category = free_category(
        doc.name.text,
        [o.text for o in body.objects],
        [(e.name.text, e.dom.text, e.cod.text) for e in body.edges],
    )
    return check_size(category)


def _functor(doc: PresentationDoc, env: Mapping[str, Value]) -> Functor:
    source = _resolve(doc.source, env, FinCategory, "category")
    target = _resolve(doc.target, env, FinCategory, "category")
    omap: Dict[str, str] = {}
    for a in doc.body.objects:
        if not source.has_object(a.left.text):
            raise UnknownReference(a.left.text, a.left.line, a.left.col)
        if not target.has_object(a.right.text):
            raise UnknownReference(a.right.text, a.right.line, a.right.col)
        omap[a.left.text] = a.right.text
    mmap = {
        source.identity(x): target.identity(omap[x]) for x in source.objects if x in omap
    }
    for a in doc.body.morphisms:
        if not source.has_morphism(a.left.text):
            raise UnknownReference(a.left.text, a.left.line, a.left.col)
        if not target.has_morphism(a.right.text):
            raise UnknownReference(a.right.text, a.right.line, a.right.col)
        mmap[a.left.text] = a.right.text
    return validate_functor(Functor(source, target, omap, mmap, name=doc.name.text))


def _nattrans(doc: PresentationDoc, env: Mapping[str, Value]) -> NatTrans:
    source = _resolve(doc.source, env, Functor, "functor")
    target = _resolve(doc.target, env, Functor, "functor")
    components: Dict[str, str] = {}
    for a in doc.body.components:
        if not source.source.has_object(a.left.text):
            raise UnknownReference(a.left.text, a.left.line, a.left.col)
        if not source.target.has_morphism(a.right.text):
            raise UnknownReference(a.right.text, a.right.line, a.right.col)
        components[a.left.text] = a.right.text
    return validate_nat_trans(NatTrans(source, target, components, name=doc.name.text))


# ============================================================================
# PUBLIC API
# ============================================================================


def elaborate(doc: PresentationDoc, env: Optional[Mapping[str, Value]] = None) -> Value:
    """
    Turn a parsed document into a validated value.

    Args:
        doc: Parsed document
        env: Previously elaborated values by name, used to resolve the
            source and target of functor and transformation documents

    Raises:
        NotAntisymmetric: A poset body relates distinct elements both ways
        CyclicGraph: A freeacyclic body has a directed cycle
        UnknownReference, InvalidDocument: Unresolvable references
        CategoryError: Any law violation, located at the document name
    """
    env = env or {}
    try:
        if doc.kind == DocKind.CATEGORY:
            value = _category(doc)
        elif doc.kind == DocKind.POSET:
            value = _poset(doc)
        elif doc.kind == DocKind.FREEACYCLIC:
            value = _freeacyclic(doc)
        elif doc.kind == DocKind.FUNCTOR:
            value = _functor(doc, env)
        else:
            value = _nattrans(doc, env)
    except CategoryError as exc:
        _locate(exc, doc.name)
        raise
    logger.debug(f"Elaborated {doc.kind.value} {doc.name.text}")
    return value


def elaborate_all(
    docs: Iterable[PresentationDoc], env: Optional[Mapping[str, Value]] = None
) -> Dict[str, Value]:
    """Elaborate documents in order; returns only the new values, by name."""
    scope: Dict[str, Value] = dict(env or {})
    result: Dict[str, Value] = {}
    for doc in docs:
        value = elaborate(doc, scope)
        scope[doc.name.text] = value
        result[doc.name.text] = value
    return result


def loads(text: str, env: Optional[Mapping[str, Value]] = None) -> Dict[str, Value]:
    """Parse and elaborate every document of a text."""
    return elaborate_all(parse_documents(text), env)


def load_file(path: Union[str, Path], env: Optional[Mapping[str, Value]] = None) -> Dict[str, Value]:
    """Parse and elaborate a `.fcat` file (UTF-8)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise InputFileError(str(path), f"not UTF-8 text ({exc.reason})") from None
    logger.debug(f"Loading {path}")
    return loads(text, env)
