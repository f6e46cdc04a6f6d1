"""
Construction records and their universal-property verification.

A :class:`Construction` is the result of a limit or colimit
construction in Cat//X: the input diagram (a shape with lax objects and
morphisms), the apex and its legs. :meth:`Construction.verify` places
inputs, apex and probe objects in a :class:`Truncation` and runs the
generic oracle on the window category, so a verdict is always relative
to the probes used.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from laxcat.core.settings import get_oracle_config
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.fincat.enumerate import iter_functors
from laxcat.fincat.functor import Functor, constant_functor
from laxcat.fincat.standard import arrow_category, empty_category, terminal_category
from laxcat.laxcomma.objects import LaxMorphism, LaxObject
from laxcat.laxcomma.truncation import Truncation
from laxcat.univprop.diagram import Cocone, Cone, Diagram, is_colimit, is_limit

logger = get_logger(__name__)

LIMIT = "limit"
COLIMIT = "colimit"


def canonical_probes(x: FinCategory, n: Optional[int] = None) -> List[LaxObject]:
    """
    The first n canonical probe objects over X.

    Order: ``(1, x)`` for each object x, then ``(2, a)`` for each functor
    ``a: 2 -> X``, then ``(∅, !)``.
    """
    n = get_oracle_config().probes if n is None else n
    point = terminal_category()
    arrow = arrow_category()
    empty = empty_category()
    probes: List[LaxObject] = []
    for obj in x.objects:
        probes.append(LaxObject(point, constant_functor(point, x, obj), name=f"(One,{obj})"))
    for i, a in enumerate(iter_functors(arrow, x)):
        if len(probes) >= n:
            break
        probes.append(LaxObject(arrow, a.renamed(f"p{i}"), name=f"(Two,p{i})"))
    probes.append(LaxObject(empty, Functor(empty, x, {}, {}, name="!"), name="(Empty,!)"))
    return probes[:n]


@dataclass
class Construction:
    """
    A (co)limit cone in Cat//X.

    Attributes:
        name: Construction name, e.g. ``"product"``
        kind: ``"limit"`` or ``"colimit"``
        shape: Index category of the diagram
        objects: Shape object -> lax object
        morphisms: Non-identity shape morphism -> lax morphism
        apex: The constructed object
        legs: Shape object -> leg (``apex -> D(j)`` or ``D(j) -> apex``)
    """

    name: str
    kind: str
    shape: FinCategory
    objects: Dict[str, LaxObject]
    morphisms: Dict[str, LaxMorphism]
    apex: LaxObject
    legs: Dict[str, LaxMorphism]
    probes: List[LaxObject] = field(default_factory=list)

    def leg(self, j: str) -> LaxMorphism:
        return self.legs[j]

    def window(self, probes: Sequence[LaxObject]) -> Truncation:
        inputs = [self.objects[j] for j in self.shape.objects]
        return Truncation(inputs + [self.apex] + list(probes), name=f"{self.name}_window")

    def verify(self, probes: Optional[Sequence[LaxObject]] = None) -> bool:
        """
        Run the oracle on a window of inputs, apex and probes.

        Args:
            probes: Extra test objects; defaults to the canonical probes
                over the workspace
        """
        if probes is None:
            probes = canonical_probes(self.apex.workspace)
        self.probes = list(probes)
        trunc = self.window(probes)
        window = trunc.category
        omap = {j: trunc.object_name(o) for j, o in self.objects.items()}
        mmap = {self.shape.identity(j): window.identity(omap[j]) for j in self.shape.objects}
        mmap.update({u: trunc.name_of(m) for u, m in self.morphisms.items()})
        diagram = Diagram.of(Functor(self.shape, window, omap, mmap, name=self.name))
        apex = trunc.object_name(self.apex)
        legs = {j: trunc.name_of(m) for j, m in self.legs.items()}
        if self.kind == LIMIT:
            ok = is_limit(diagram, Cone(apex, legs))
        else:
            ok = is_colimit(diagram, Cocone(apex, legs))
        logger.debug(f"{self.name} verified={ok} against {len(self.probes)} probes")
        return ok

    def probe_names(self) -> List[str]:
        return [p.name for p in self.probes]
