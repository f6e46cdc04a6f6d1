"""
Tokenizer and recursive-descent parser for `.fcat` documents.

Grammar::

    file      := document*
    document  := KIND NAME [":" NAME ("->" | "=>") NAME] "{" section* "}"
    section   := HEADER entry*          (entries end with ";")

Words are separated by whitespace; ``{``, ``}`` and ``;`` delimit
themselves and ``#`` starts a comment running to the end of the line.
"""

from typing import Callable, Dict, List, NamedTuple, Optional, Set, Tuple

from laxcat.core.exceptions import DuplicateName, PresentationSyntaxError, UnknownReference
from laxcat.core.types import DocKind
from laxcat.core.utils.logger import get_logger
from laxcat.core.utils.naming import identity_name, is_valid_name
from laxcat.presentation.ast import (
    Arrow,
    Assignment,
    CategoryBody,
    Composite,
    FreeAcyclicBody,
    FunctorBody,
    Name,
    NatTransBody,
    PosetBody,
    PresentationDoc,
    Typing,
)

logger = get_logger(__name__)

SECTION_HEADERS = frozenset(
    {
        "objects:",
        "identities:",
        "morphisms:",
        "compose:",
        "elements:",
        "edges:",
        "components:",
    }
)

PUNCTUATION = frozenset({"{", "}", ";"})

_SECTIONS_BY_KIND: Dict[DocKind, Tuple[str, ...]] = {
    DocKind.CATEGORY: ("objects:", "identities:", "morphisms:", "compose:"),
    DocKind.POSET: ("elements:",),
    DocKind.FREEACYCLIC: ("objects:", "edges:"),
    DocKind.FUNCTOR: ("objects:", "morphisms:"),
    DocKind.NATTRANS: ("components:",),
}


class Token(NamedTuple):
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    """Split text into positioned tokens."""
    tokens: List[Token] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        i = 0
        while i < len(line):
            ch = line[i]
            if ch == "#":
                break
            if ch.isspace():
                i += 1
                continue
            if ch in PUNCTUATION:
                tokens.append(Token(ch, line_no, i + 1))
                i += 1
                continue
            start = i
            while i < len(line) and not line[i].isspace() and line[i] not in "{};#":
                i += 1
            word = line[start:i]
            # "f:" is a name followed by a colon unless it is a section header
            if len(word) > 1 and word.endswith(":") and word not in SECTION_HEADERS:
                tokens.append(Token(word[:-1], line_no, start + 1))
                tokens.append(Token(":", line_no, i))
            else:
                tokens.append(Token(word, line_no, start + 1))
    return tokens


class Parser:
    """Parses one `.fcat` text; every error carries a line and column."""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        lines = text.splitlines() or [""]
        self._end = Token("end of input", len(lines), len(lines[-1]) + 1)

    # ------------------------------------------------------------------
    # token helpers
    # ------------------------------------------------------------------

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _here(self) -> Token:
        return self.peek() or self._end

    def _fail(self, expected: str) -> PresentationSyntaxError:
        tok = self._here()
        found = tok.text if self.peek() is not None else "end of input"
        return PresentationSyntaxError(tok.line, tok.col, expected, repr(found))

    def advance(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise self._fail("more input")
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok is None or tok.text != text:
            raise self._fail(f"'{text}'")
        self.pos += 1
        return tok

    def at(self, *texts: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.text in texts

    def at_header(self) -> bool:
        tok = self.peek()
        return tok is not None and tok.text in SECTION_HEADERS

    def name(self) -> Name:
        tok = self.peek()
        if tok is None or tok.text in PUNCTUATION or tok.text in SECTION_HEADERS:
            raise self._fail("name")
        if not is_valid_name(tok.text):
            raise self._fail("name")
        self.pos += 1
        return Name(tok.text, tok.line, tok.col)

    def end_entry(self) -> None:
        """Consume ``;``; it may be left out before ``}`` or a header."""
        if self.at(";"):
            self.pos += 1
        elif not (self.at("}") or self.at_header()):
            raise self._fail("';'")

    # ------------------------------------------------------------------
    # documents
    # ------------------------------------------------------------------

    def documents(self) -> List[PresentationDoc]:
        docs: List[PresentationDoc] = []
        seen: Set[str] = set()
        while self.peek() is not None:
            doc = self.document()
            if doc.name.text in seen:
                raise DuplicateName(doc.name.text, doc.line, doc.col)
            seen.add(doc.name.text)
            docs.append(doc)
        return docs

    def document(self) -> PresentationDoc:
        tok = self.peek()
        if tok is None or tok.text not in DocKind.keywords():
            raise self._fail("one of " + ", ".join(DocKind.keywords()))
        self.pos += 1
        kind = DocKind(tok.text)
        name = self.name()
        source = target = None
        if kind in (DocKind.FUNCTOR, DocKind.NATTRANS):
            self.expect(":")
            source = self.name()
            self.expect("->" if kind == DocKind.FUNCTOR else "=>")
            target = self.name()
        self.expect("{")
        sections = self.sections(kind)
        self.expect("}")
        body = _BODY_BUILDERS[kind](self, sections)
        logger.debug(f"Parsed {kind.value} {name.text}")
        return PresentationDoc(kind, name, body, source, target)

    def sections(self, kind: DocKind) -> Dict[str, Tuple[Token, list]]:
        allowed = _SECTIONS_BY_KIND[kind]
        found: Dict[str, Tuple[Token, list]] = {}
        while not self.at("}"):
            if kind == DocKind.POSET and not self.at_header():
                found.setdefault("", (self._here(), []))[1].append(self.chain())
                continue
            tok = self.peek()
            if tok is None or tok.text not in allowed:
                raise self._fail("one of " + ", ".join(allowed + ("'}'",)))
            if tok.text in found:
                raise DuplicateName(tok.text, tok.line, tok.col)
            self.pos += 1
            entries: list = []
            if tok.text in ("objects:", "elements:") and kind != DocKind.FUNCTOR:
                while not (self.at(";", "}") or self.at_header()):
                    entries.append(self.name())
                self.end_entry()
            else:
                parse_entry = _ENTRY_PARSERS[(kind, tok.text)]
                while not (self.at("}") or self.at_header()):
                    entries.append(parse_entry(self))
                    self.end_entry()
            found[tok.text] = (tok, entries)
        return found

    # ------------------------------------------------------------------
    # entries
    # ------------------------------------------------------------------

    def arrow(self) -> Arrow:
        name = self.name()
        self.expect(":")
        dom = self.name()
        self.expect("->")
        return Arrow(name, dom, self.name())

    def typing(self) -> Typing:
        name = self.name()
        self.expect(":")
        return Typing(name, self.name())

    def composite(self) -> Composite:
        g = self.name()
        f = self.name()
        self.expect("=")
        return Composite(g, f, self.name())

    def assignment(self) -> Assignment:
        left = self.name()
        self.expect("=")
        return Assignment(left, self.name())

    def chain(self) -> Tuple[Name, ...]:
        names = [self.name()]
        self.expect("<=")
        names.append(self.name())
        while self.at("<="):
            self.pos += 1
            names.append(self.name())
        self.end_entry()
        return tuple(names)


_ENTRY_PARSERS: Dict[Tuple[DocKind, str], Callable[[Parser], object]] = {
    (DocKind.CATEGORY, "identities:"): Parser.typing,
    (DocKind.CATEGORY, "morphisms:"): Parser.arrow,
    (DocKind.CATEGORY, "compose:"): Parser.composite,
    (DocKind.FREEACYCLIC, "edges:"): Parser.arrow,
    (DocKind.FUNCTOR, "objects:"): Parser.assignment,
    (DocKind.FUNCTOR, "morphisms:"): Parser.assignment,
    (DocKind.NATTRANS, "components:"): Parser.assignment,
}


# ============================================================================
# SCOPE CHECKS
# ============================================================================


def _entries(sections: Dict[str, Tuple[Token, list]], header: str) -> tuple:
    return tuple(sections[header][1]) if header in sections else ()


def _declare(names, scope: Dict[str, Name]) -> None:
    for n in names:
        if n.text in scope:
            raise DuplicateName(n.text, n.line, n.col)
        scope[n.text] = n


def _require(name: Name, scope) -> None:
    if name.text not in scope:
        raise UnknownReference(name.text, name.line, name.col)


def _category_body(parser: Parser, sections) -> CategoryBody:
    body = CategoryBody(
        objects=_entries(sections, "objects:"),
        identities=_entries(sections, "identities:"),
        morphisms=_entries(sections, "morphisms:"),
        composites=_entries(sections, "compose:"),
    )
    if "objects:" not in sections:
        raise parser._fail("'objects:'")
    objects: Dict[str, Name] = {}
    _declare(body.objects, objects)

    named: Dict[str, Name] = {}
    for t in body.identities:
        _require(t.obj, objects)
        if t.obj.text in named:
            raise DuplicateName(t.obj.text, t.obj.line, t.obj.col)
        named[t.obj.text] = t.name
    morphisms: Dict[str, Name] = {}
    for x, n in objects.items():
        ident = named.get(x, Name(identity_name(x), n.line, n.col))
        _declare([ident], morphisms)
    for a in body.morphisms:
        _require(a.dom, objects)
        _require(a.cod, objects)
        _declare([a.name], morphisms)

    pairs: Set[Tuple[str, str]] = set()
    for c in body.composites:
        for ref in (c.g, c.f, c.result):
            _require(ref, morphisms)
        if (c.g.text, c.f.text) in pairs:
            raise DuplicateName(f"{c.g.text} {c.f.text}", c.g.line, c.g.col)
        pairs.add((c.g.text, c.f.text))
    return body


def _poset_body(parser: Parser, sections) -> PosetBody:
    body = PosetBody(
        elements=_entries(sections, "elements:"),
        chains=_entries(sections, ""),
    )
    _declare(body.elements, {})
    return body


def _freeacyclic_body(parser: Parser, sections) -> FreeAcyclicBody:
    body = FreeAcyclicBody(
        objects=_entries(sections, "objects:"),
        edges=_entries(sections, "edges:"),
    )
    objects: Dict[str, Name] = {}
    _declare(body.objects, objects)
    edges: Dict[str, Name] = {}
    for e in body.edges:
        _require(e.dom, objects)
        _require(e.cod, objects)
        _declare([e.name], edges)
    return body


def _functor_body(parser: Parser, sections) -> FunctorBody:
    body = FunctorBody(
        objects=_entries(sections, "objects:"),
        morphisms=_entries(sections, "morphisms:"),
    )
    _declare([a.left for a in body.objects], {})
    _declare([a.left for a in body.morphisms], {})
    return body


def _nattrans_body(parser: Parser, sections) -> NatTransBody:
    body = NatTransBody(components=_entries(sections, "components:"))
    _declare([a.left for a in body.components], {})
    return body


_BODY_BUILDERS = {
    DocKind.CATEGORY: _category_body,
    DocKind.POSET: _poset_body,
    DocKind.FREEACYCLIC: _freeacyclic_body,
    DocKind.FUNCTOR: _functor_body,
    DocKind.NATTRANS: _nattrans_body,
}


# ============================================================================
# PUBLIC API
# ============================================================================


def parse_documents(text: str) -> List[PresentationDoc]:
    """
    Parse every document of a `.fcat` text.

    Raises:
        PresentationSyntaxError: First token that does not fit the grammar
        DuplicateName: A name declared twice in one scope
        UnknownReference: A reference to a name the document does not declare
    """
    return Parser(text).documents()


def parse(text: str) -> PresentationDoc:
    """Parse a text holding exactly one document."""
    parser = Parser(text)
    doc = parser.document()
    if parser.peek() is not None:
        raise parser._fail("end of input")
    return doc
