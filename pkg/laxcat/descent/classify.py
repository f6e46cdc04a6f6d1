"""
Descent classification of morphisms in finite categories.

``q: u -> v`` is graded by the comparison functor ``K: C/v -> EM(T)``:
faithful gives almost descent, fully faithful descent, an equivalence
effective descent.
"""

import time
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from laxcat.core.exceptions import NotAPullbackSquare, NotFullyFaithful
from laxcat.core.types import DescentClass
from laxcat.core.utils.logger import get_logger
from laxcat.descent.monad import comparison_functor, descent_monad, eilenberg_moore
from laxcat.fincat.category import FinCategory
from laxcat.fincat.functor import Functor
from laxcat.fincat.properties import (
    is_essentially_surjective,
    is_faithful,
    is_full,
    non_faithful_witness,
)
from laxcat.univprop.diagram import Cocone, Cone, Diagram, is_colimit, is_limit
from laxcat.univprop.limits import pullback

logger = get_logger(__name__)


class DescentReport(BaseModel):
    """
    Classification of one morphism.

    Attributes:
        morphism: Name of q
        category: Name of C
        grade: The strongest grade reached
        faithful, full, essentially_surjective: Properties of K
        slice_size: ``(objects, morphisms)`` of ``C/v``
        algebra_size: ``(objects, morphisms)`` of ``EM(T)``
        witnesses: Failure witnesses, or the isomorphisms ``K(n) ≅ alg``
        elapsed_ms: Wall time of the classification
    """

    morphism: str
    category: str
    grade: DescentClass
    faithful: bool
    full: bool
    essentially_surjective: bool
    slice_size: Tuple[int, int]
    algebra_size: Tuple[int, int]
    witnesses: List[str] = Field(default_factory=list)
    elapsed_ms: float = 0.0


def grade_of(faithful: bool, full: bool, essentially_surjective: bool) -> DescentClass:
    if not faithful:
        return DescentClass.NOT_ALMOST
    if not full:
        return DescentClass.ALMOST_DESCENT
    if not essentially_surjective:
        return DescentClass.DESCENT
    return DescentClass.EFFECTIVE_DESCENT


def _non_full_witness(k: Functor) -> Optional[str]:
    c, d = k.source, k.target
    for x in c.objects:
        for y in c.objects:
            hit = {k.mmap[f] for f in c.hom(x, y)}
            for g in d.hom(k.omap[x], k.omap[y]):
                if g not in hit:
                    return g
    return None


def _iso_witnesses(k: Functor) -> List[str]:
    d = k.target
    found = []
    for alg in d.objects:
        for n, image in k.omap.items():
            isos = d.isomorphisms(image, alg)
            if isos:
                found.append(f"K({n})={image}~{alg} via {isos[0]}")
                break
    return found


def classify_descent(c: FinCategory, q: str) -> DescentReport:
    """
    Grade ``q`` by building ``EM(T)`` and the comparison functor.

    Raises:
        MissingPullback: if ``q*`` is not defined
        SizeLimitExceeded: if the algebra enumeration is too large
    """
    started = time.perf_counter()
    monad = descent_monad(c, q)
    em = eilenberg_moore(monad)
    k = comparison_functor(monad, em)

    faithful = is_faithful(k)
    full = is_full(k)
    surjective = is_essentially_surjective(k)
    grade = grade_of(faithful, full, surjective)

    witnesses: List[str] = []
    if not faithful:
        witnesses.extend(non_faithful_witness(k) or ())
    elif not full:
        missing = _non_full_witness(k)
        if missing:
            witnesses.append(missing)
    elif not surjective:
        images = set(k.omap.values())
        witnesses.extend(
            a for a in em.category.objects
            if not any(em.category.isomorphisms(i, a) for i in images)
        )
    else:
        witnesses = _iso_witnesses(k)

    report = DescentReport(
        morphism=q,
        category=c.name,
        grade=grade,
        faithful=faithful,
        full=full,
        essentially_surjective=surjective,
        slice_size=monad.change.source.category.size,
        algebra_size=em.category.size,
        witnesses=witnesses,
        elapsed_ms=(time.perf_counter() - started) * 1000,
    )
    logger.info(f"{q} in {c.name}: {grade.value}")
    return report


# ============================================================================
# RELATED CHECKS
# ============================================================================


def is_regular_epi(c: FinCategory, q: str) -> Optional[bool]:
    """
    True iff q coequalizes its kernel pair universally.

    Returns:
        None when the kernel pair does not exist
    """
    kernel = pullback(c, q, q)
    if kernel is None:
        return None
    diagram = Diagram.parallel(c, kernel.left, kernel.right)
    return is_colimit(diagram, Cocone(c.cod(q), {"0": c.compose(q, kernel.left), "1": q}))


def pullback_stability(c: FinCategory, q: str) -> Dict[str, DescentClass]:
    """
    Grade every existing pullback of q along morphisms into its codomain.

    Returns:
        Morphism p -> grade of the pullback of q along p
    """
    grades: Dict[str, DescentClass] = {}
    for x in c.objects:
        for p in c.hom(x, c.cod(q)):
            square = pullback(c, q, p)
            if square is None:
                continue
            grades[p] = classify_descent(c, square.right).grade
    return grades


def preserves_pullbacks_of(v: Functor, q: str) -> Optional[str]:
    """
    Check that v sends every pullback along q to a pullback.

    Returns:
        None, or the apex of the first square that is not preserved
    """
    c, d = v.source, v.target
    for x in c.objects:
        for m in c.hom(x, c.cod(q)):
            square = pullback(c, m, q)
            if square is None:
                continue
            image = Diagram.cospan(d, v.mmap[m], v.mmap[q])
            legs = {
                "0": v.mmap[square.left],
                "1": v.mmap[square.right],
                "2": v.mmap[c.compose(m, square.left)],
            }
            if not is_limit(image, Cone(v.omap[square.apex], legs)):
                return square.apex
    return None


def _reflects(v: Functor, q: str, grade: DescentClass, full: bool) -> bool:
    if not is_faithful(v) or (full and not is_full(v)):
        raise NotFullyFaithful(v.name, non_faithful_witness(v) or ())
    bad = preserves_pullbacks_of(v, q)
    if bad is not None:
        raise NotAPullbackSquare(bad)
    image = classify_descent(v.target, v.mmap[q]).grade
    if not image.at_least(grade):
        return True
    return classify_descent(v.source, q).grade.at_least(grade)


def reflects_almost_descent(v: Functor, q: str) -> bool:
    """
    A faithful pullback-preserving v reflects almost descent at q.

    Raises:
        NotFullyFaithful: if v is not faithful
        NotAPullbackSquare: if v does not preserve a pullback along q
    """
    return _reflects(v, q, DescentClass.ALMOST_DESCENT, full=False)


def reflects_descent(v: Functor, q: str) -> bool:
    """A fully faithful pullback-preserving v reflects descent at q."""
    return _reflects(v, q, DescentClass.DESCENT, full=True)
