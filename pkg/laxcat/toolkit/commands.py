"""
Handlers behind ``laxcat compute`` and ``laxcat check``.

Every handler is registered in :class:`ConstructionRegistry` and takes a
:class:`Request`. Constructions return the canonical text of their
result together with the :class:`Construction` record when there is
one; checks return the list of independent checks to run, in input order.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from laxcat.core.exceptions import InputFileError
from laxcat.core.registry import ConstructionRegistry
from laxcat.core.types import RegistryKind
from laxcat.fincat.category import FinCategory
from laxcat.fincat.constructions import opposite, product_category
from laxcat.fincat.functor import Functor, constant_functor
from laxcat.fincat.standard import terminal_category
from laxcat.laxcomma.objects import LaxObject
from laxcat.laxstruct.coequalizer import coequalizer_laxcomma
from laxcat.laxstruct.colimits import coproduct_laxcomma, initial_laxcomma
from laxcat.laxstruct.construction import Construction, canonical_probes
from laxcat.laxstruct.exponential import exponential_laxcomma
from laxcat.laxstruct.kan import opcartesian_lift
from laxcat.laxstruct.limits import equalizer_laxcomma, product_laxcomma, pullback_laxcomma, terminal_laxcomma
from laxcat.presentation.elaborate import load_file
from laxcat.toolkit import checks
from laxcat.toolkit.io import dump_lax_object, load_lax_morphism, load_lax_object
from laxcat.univprop.ends import end_of

Computed = Tuple[str, Optional[Construction]]
Check = checks.Check


@dataclass
class Request:
    """
    Parsed command-line input.

    Attributes:
        workspace: The category X
        inputs: Input files, in order
        probes: Probe budget, None for the configured default
        bound: Saturation bound for coequalizers
        morphisms: Morphisms to classify (descent)
        workers: Concurrency for batches
    """

    workspace: Optional[FinCategory] = None
    inputs: List[Path] = field(default_factory=list)
    probes: Optional[int] = None
    bound: Optional[int] = None
    morphisms: List[str] = field(default_factory=list)
    workers: Optional[int] = None

    def require_workspace(self) -> FinCategory:
        if self.workspace is None:
            raise InputFileError("--workspace", "a workspace category is required")
        return self.workspace

    def require_inputs(self, count: int, what: str) -> List[Path]:
        if len(self.inputs) != count:
            raise InputFileError("--in", f"expected {count} {what}, got {len(self.inputs)}")
        return self.inputs

    def objects(self, count: int) -> List[LaxObject]:
        x = self.require_workspace()
        return [load_lax_object(p, x) for p in self.require_inputs(count, "lax object files")]

    def morphisms_in(self, count: int):
        x = self.require_workspace()
        return [load_lax_morphism(p, x) for p in self.require_inputs(count, "lax morphism files")]


def construction(name: str):
    return ConstructionRegistry.register(RegistryKind.CONSTRUCTION, name)


def check(name: str):
    return ConstructionRegistry.register(RegistryKind.CHECK, name)


def _apex(result: Construction) -> Computed:
    return dump_lax_object(result.apex), result


# ============================================================================
# CONSTRUCTIONS
# ============================================================================


@construction("terminal")
def compute_terminal(request: Request) -> Computed:
    return _apex(terminal_laxcomma(request.require_workspace()))


@construction("initial")
def compute_initial(request: Request) -> Computed:
    return _apex(initial_laxcomma(request.require_workspace()))


@construction("product")
def compute_product(request: Request) -> Computed:
    return _apex(product_laxcomma(*request.objects(2)))


@construction("coproduct")
def compute_coproduct(request: Request) -> Computed:
    return _apex(coproduct_laxcomma(*request.objects(2)))


@construction("pullback")
def compute_pullback(request: Request) -> Computed:
    return _apex(pullback_laxcomma(*request.morphisms_in(2)))


@construction("equalizer")
def compute_equalizer(request: Request) -> Computed:
    return _apex(equalizer_laxcomma(*request.morphisms_in(2)))


@construction("coequalizer")
def compute_coequalizer(request: Request) -> Computed:
    f, g = request.morphisms_in(2)
    return _apex(coequalizer_laxcomma(f, g, bound=request.bound))


@construction("exponential")
def compute_exponential(request: Request) -> Computed:
    exponent, base = request.objects(2)
    return dump_lax_object(exponential_laxcomma(exponent, base).apex), None


@construction("lan")
def compute_lan(request: Request) -> Computed:
    """``(Y, lan_f a)`` for the functor and domain of a lax morphism file."""
    (m,) = request.morphisms_in(1)
    return dump_lax_object(opcartesian_lift(m.dom, m.functor).cod), None


@construction("end")
def compute_end(request: Request) -> Computed:
    """
    The end of ``T: W^op × W -> X`` as the point ``(1, ∫T)``.

    The file declares W first; T's source must have the object and
    morphism names of ``W^op × W``.
    """
    x = request.require_workspace()
    (path,) = request.require_inputs(1, "file")
    values = load_file(path, {x.name: x})
    categories = [v for v in values.values() if isinstance(v, FinCategory)]
    functors = [v for v in values.values() if isinstance(v, Functor) and v.target == x]
    if not categories or not functors:
        raise InputFileError(str(path), f"expected a category W and a functor into {x.name}")
    w = categories[0]
    t = functors[0]
    square = product_category(opposite(w), w)
    if t.source != square:
        raise InputFileError(str(path), f"the source of {t.name} is not {w.name}^op x {w.name}")
    end = end_of(Functor(square, x, t.omap, t.mmap, name=t.name), w)
    point = terminal_category()
    return dump_lax_object(LaxObject(point, constant_functor(point, x, end.apex), name="end")), None


# ============================================================================
# CHECKS
# ============================================================================


@check("lattice")
def lattice_checks(request: Request) -> List[Check]:
    x = request.require_workspace()
    return [lambda: checks.check_lattice(x)]


@check("strict-initial")
def strict_initial_checks(request: Request) -> List[Check]:
    x = request.require_workspace()
    return [lambda: checks.check_strict_initial(x)]


@check("topologicity")
def topologicity_checks(request: Request) -> List[Check]:
    x = request.require_workspace()
    return [lambda: checks.check_topologicity(x, request.probes)]


@check("adjunctions")
def adjunction_checks(request: Request) -> List[Check]:
    x = request.require_workspace()
    return [lambda: checks.check_adjunctions(x, request.probes)]


@check("descent-classify")
def descent_checks(request: Request) -> List[Check]:
    """One check per ``--morphism``, or per non-identity morphism."""
    return checks.descent_checks(request.require_workspace(), request.morphisms)


@check("lu-pullback")
def lu_pullback_checks(request: Request) -> List[Check]:
    x = request.require_workspace()
    return [lambda: checks.check_lu_pullback(x)]


@check("l-pullback-zero")
def l_pullback_zero_checks(request: Request) -> List[Check]:
    x = request.require_workspace()
    return [lambda: checks.check_l_pullback_zero(x)]


@check("extensivity")
def extensivity_checks(request: Request) -> List[Check]:
    """
    Coproduct of two lax objects (``--in``) or of the first two probes,
    tested against lax morphisms from the probes.
    """
    x = request.require_workspace()
    window = canonical_probes(x, request.probes)
    if len(window) < 2:
        window = canonical_probes(x, 2)
    if request.inputs:
        first, second = request.objects(2)
    else:
        first, second = window[0], window[1]
    coproduct = coproduct_laxcomma(first, second)
    instances = checks.extensivity_instances(coproduct, window, limit=12)
    return [lambda m=m: checks.check_extensivity(coproduct, m) for m in instances]
