"""
Reading and writing workspaces, lax objects and lax morphisms as `.fcat`
files.

A lax object file holds its base category and its structure functor
into the workspace. A lax morphism file holds, in order, the domain
base and structure, the codomain base and structure, the functor ``f``,
the composite ``b∘f`` and the transformation ``γ``. Roles are read off
the document order; the workspace is referenced by name.
"""

from pathlib import Path
from typing import Dict, List, Union

from laxcat.core.exceptions import InputFileError
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.functor import Functor, NatTrans, compose_functors
from laxcat.laxcomma.objects import LaxMorphism, LaxObject
from laxcat.presentation.elaborate import load_file
from laxcat.presentation.serialize import dumps

logger = get_logger(__name__)

PathLike = Union[str, Path]


def _of_kind(values: Dict[str, object], kind: type) -> List:
    return [v for v in values.values() if isinstance(v, kind)]


def load_workspace(path: PathLike) -> FinCategory:
    """The last category declared in the file."""
    categories = _of_kind(load_file(path), FinCategory)
    if not categories:
        raise InputFileError(str(path), "no category document")
    return categories[-1]


def load_lax_object(path: PathLike, workspace: FinCategory) -> LaxObject:
    """
    Read ``(W, a)``; the structure is the first functor into the workspace.

    Raises:
        InputFileError: if the file has no functor into the workspace
    """
    values = load_file(path, {workspace.name: workspace})
    structures = [f for f in _of_kind(values, Functor) if f.target == workspace]
    if not structures:
        raise InputFileError(str(path), f"no functor into {workspace.name}")
    a = structures[0]
    return LaxObject(a.source, a, name=Path(path).stem)


def load_lax_morphism(path: PathLike, workspace: FinCategory) -> LaxMorphism:
    """
    Read ``(f, γ): (W, a) -> (Y, b)``.

    Raises:
        InputFileError: if the documents do not fit their roles
    """
    values = load_file(path, {workspace.name: workspace})
    functors: List[Functor] = _of_kind(values, Functor)
    cells: List[NatTrans] = _of_kind(values, NatTrans)
    if len(functors) < 3 or not cells:
        raise InputFileError(str(path), "expected structures a, b, functor f and a transformation")
    a, b, f = functors[:3]
    gamma = cells[-1]
    if a.target != workspace or b.target != workspace:
        raise InputFileError(str(path), f"the first two functors must land in {workspace.name}")
    if f.source != a.source or f.target != b.source:
        raise InputFileError(str(path), f"{f.name} does not go from the base of {a.name} to that of {b.name}")
    if gamma.source != a:
        raise InputFileError(str(path), f"{gamma.name} does not start at {a.name}")
    if gamma.target != compose_functors(b, f):
        raise InputFileError(str(path), f"{gamma.name} does not end at b∘f")
    stem = Path(path).stem
    dom = LaxObject(a.source, a, name=f"{stem}.dom")
    cod = LaxObject(b.source, b, name=f"{stem}.cod")
    logger.debug(f"Loaded lax morphism {stem}: {f.source.name} -> {f.target.name}")
    return LaxMorphism(dom, cod, f, gamma, name=stem)


# ============================================================================
# WRITING
# ============================================================================


def _restructured(o: LaxObject, base: str, structure: str) -> List:
    w = o.base.renamed(base)
    a = Functor(w, o.workspace, o.structure.omap, o.structure.mmap, name=structure)
    return [w, a]


def dump_lax_object(o: LaxObject) -> str:
    """``category W`` followed by ``functor a : W -> X``."""
    return dumps(_restructured(o, "W", "a"))


def dump_lax_morphism(m: LaxMorphism) -> str:
    w, a = _restructured(m.dom, "W", "a")
    y, b = _restructured(m.cod, "Y", "b")
    f = Functor(w, y, m.functor.omap, m.functor.mmap, name="f")
    bf = compose_functors(b, f, name="bf")
    gamma = NatTrans(a, bf, m.cell.components, name="gamma")
    return dumps([w, a, y, b, f, bf, gamma])


def write_text(text: str, out: PathLike = None) -> str:
    """Write to ``out`` when given; the text is returned either way."""
    if out is not None:
        with Path(out).open("w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        logger.info(f"Wrote {out}")
    return text
