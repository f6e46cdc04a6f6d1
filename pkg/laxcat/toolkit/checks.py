"""
Property checks over a workspace category X.

Each check returns a :class:`CheckReport`. An unmet hypothesis (a
:class:`HypothesisError` or a missing limit in X) gives a skipped
verdict carrying the hypothesis; a failure always names a witness.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from functools import wraps
from itertools import combinations_with_replacement, islice
from typing import Callable, Iterator, List, Optional, Sequence

from laxcat.core.exceptions import BijectiveFailure, HypothesisError, MissingLimit
from laxcat.core.settings import get_oracle_config
from laxcat.core.utils.logger import get_logger
from laxcat.descent.classify import classify_descent
from laxcat.descent.monad import descent_monad
from laxcat.descent.verify import verify_L_pullback_zero, verify_LU_pullback
from laxcat.fincat.category import FinCategory
from laxcat.fincat.enumerate import enumerate_functors
from laxcat.fincat.functor import constant_functor
from laxcat.fincat.standard import arrow_category, empty_category, terminal_category
from laxcat.laxcomma.adjunction import L, l_adjunction, r_adjunction, verify_adjunction, verify_triangle_identities
from laxcat.laxcomma.objects import LaxMorphism, LaxObject, iter_lax_hom
from laxcat.laxstruct.colimits import coproduct_laxcomma, copair_lax
from laxcat.laxstruct.construction import Construction, canonical_probes
from laxcat.laxstruct.limits import pullback_laxcomma
from laxcat.toolkit.lifts import initial_lift, lift_failure
from laxcat.toolkit.report import CheckReport, failed, passed, skipped
from laxcat.univprop.checks import lattice_defect, strict_initial_check
from laxcat.univprop.limits import initial_object

logger = get_logger(__name__)

Check = Callable[[], CheckReport]


def timed(name: str) -> Callable:
    """Time a check, turning unmet hypotheses into a skipped verdict."""

    def decorator(func: Callable[..., CheckReport]) -> Callable[..., CheckReport]:
        @wraps(func)
        def wrapper(*args, **kwargs) -> CheckReport:
            started = time.perf_counter()
            try:
                report = func(*args, **kwargs)
            except HypothesisError as exc:
                logger.info(f"{name} skipped: {exc.message}")
                report = skipped(name, exc.message)
            except MissingLimit as exc:
                logger.info(f"{name} skipped: {exc.message}")
                report = skipped(name, exc.message)
            report.elapsed_ms = (time.perf_counter() - started) * 1000
            return report

        return wrapper

    return decorator


def run_batch(checks: Sequence[Check], workers: Optional[int] = None) -> List[CheckReport]:
    """Run independent checks, concurrently when ``workers > 1``; results keep input order."""
    workers = workers or get_oracle_config().workers
    if workers <= 1 or len(checks) <= 1:
        return [check() for check in checks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda check: check(), checks))


def _is_lax_iso(m: LaxMorphism) -> bool:
    f = m.functor
    x = m.dom.workspace
    return (
        len(set(f.omap.values())) == len(f.source.objects) == len(f.target.objects)
        and len(set(f.mmap.values())) == len(f.source.morphisms) == len(f.target.morphisms)
        and all(x.is_iso(c) for c in m.cell.components.values())
    )


# ============================================================================
# EXTENSIVITY
# ============================================================================


@timed("extensivity")
def check_extensivity(coproduct: Construction, instance: LaxMorphism) -> CheckReport:
    """
    Coproducts are disjoint and stable under pullback along ``instance``.

    The instance is pulled back along both injections; the copairing of
    the two pulled-back legs must be an isomorphism onto its domain, and
    the injections must pull back to the initial object.
    """
    x = coproduct.apex.workspace
    if initial_object(x) is None:
        return skipped("extensivity", f"{x.name} has no initial object", subject=instance.name)
    inl, inr = coproduct.leg("0"), coproduct.leg("1")
    disjoint = pullback_laxcomma(inl, inr).apex
    if disjoint.base.objects:
        return failed("extensivity", [inl.name, inr.name], "injections are not disjoint", subject=instance.name)
    left, right = pullback_laxcomma(instance, inl), pullback_laxcomma(instance, inr)
    pieces = coproduct_laxcomma(left.apex, right.apex)
    comparison = copair_lax(pieces, left.leg("0"), right.leg("0"))
    if not _is_lax_iso(comparison):
        return failed("extensivity", [instance.name], "comparison is not invertible", subject=instance.name)
    return passed("extensivity", subject=instance.name)


def extensivity_instances(coproduct: Construction, probes: Sequence[LaxObject], limit: int) -> List[LaxMorphism]:
    """The injections followed by lax morphisms from the probes, at most ``limit``."""
    found = [coproduct.leg("0"), coproduct.leg("1")]
    for probe in probes:
        found.extend(islice(iter_lax_hom(probe, coproduct.apex), limit))
    return found[:limit]


# ============================================================================
# LATTICES AND TOPOLOGICITY
# ============================================================================


def _family_name(values: Sequence[str]) -> str:
    return f"family({','.join(values)})"


@timed("lattice")
def check_lattice(x: FinCategory) -> CheckReport:
    defect = lattice_defect(x)
    if defect is None:
        return passed("lattice", subject=x.name)
    reason, witness = defect
    return failed("lattice", [_family_name(witness)], reason, subject=x.name)


@timed("strict-initial")
def check_strict_initial(x: FinCategory) -> CheckReport:
    zero = initial_object(x)
    if zero is None:
        return failed("strict-initial", ["no initial object"], "no initial object", subject=x.name)
    if not strict_initial_check(x):
        into = [f for y in x.objects for f in x.hom(y, zero) if not x.is_iso(f)]
        return failed("strict-initial", into[:1], f"{zero} is not strict", subject=x.name)
    return passed("strict-initial", subject=x.name, notes=[f"initial object {zero}"])


def point_families(x: FinCategory, size: int = 2) -> Iterator[List[str]]:
    """Families of objects of X of up to ``size`` members, smallest first."""
    for n in range(size + 1):
        for family in combinations_with_replacement(x.objects, n):
            yield list(family)


def _point_sources(x: FinCategory, values: Sequence[str]):
    point = terminal_category()
    ident = enumerate_functors(point, point)[0]
    return [
        (ident, LaxObject(point, constant_functor(point, x, v), name=f"(One,{v})"))
        for v in values
    ]


@timed("topologicity")
def check_topologicity(x: FinCategory, probes: Optional[int] = None) -> CheckReport:
    """
    U: Cat//X -> Cat is topological at finite scale iff X is a complete lattice.

    A lattice verdict is corroborated by lifting every family of at most
    two points and testing initiality against the probes; otherwise an
    unliftable family is exhibited when one exists.
    """
    point = terminal_category()
    window = canonical_probes(x, probes)
    names = [p.name for p in window]
    defect = lattice_defect(x)
    unliftable = None
    for values in point_families(x):
        sources = _point_sources(x, values)
        try:
            lift = initial_lift(point, x, sources)
        except MissingLimit:
            unliftable = values
            break
        bad = lift_failure(lift, sources, window)
        if bad:
            return failed(
                "topologicity",
                [_family_name(values), bad],
                "lift is not initial",
                subject=x.name,
                probes=names,
            )
    if defect is None:
        return passed("topologicity", subject=x.name, probes=names, notes=["finite-scale verdict"])
    reason, witness = defect
    family = _family_name(unliftable if unliftable is not None else witness)
    return failed("topologicity", [family], reason, subject=x.name, probes=names, notes=["finite-scale verdict"])


# ============================================================================
# ADJUNCTIONS
# ============================================================================


@timed("adjunctions")
def check_adjunctions(x: FinCategory, probes: Optional[int] = None) -> CheckReport:
    """Hom bijections and triangle identities of ``L ⊣ U ⊣ R`` on a window."""
    categories = [empty_category(), terminal_category(), arrow_category()]
    objects = canonical_probes(x, probes)
    names = [o.name for o in objects]
    try:
        for adj in (l_adjunction(x, categories, objects), r_adjunction(x, objects, categories)):
            verify_adjunction(adj)
            verify_triangle_identities(adj)
    except BijectiveFailure as exc:
        return failed("adjunctions", list(exc.witness) or [exc.message], exc.message, subject=x.name, probes=names)
    return passed("adjunctions", subject=x.name, probes=names)


# ============================================================================
# DESCENT
# ============================================================================


@timed("descent-classify")
def check_descent(c: FinCategory, q: str) -> CheckReport:
    """Classify q; the monad laws are checked first."""
    law = descent_monad(c, q).check_laws()
    if law is not None:
        return failed("descent-classify", [q, law], "monad law fails", subject=q)
    report = classify_descent(c, q)
    notes = [
        f"grade: {report.grade.value}",
        f"faithful={report.faithful} full={report.full} "
        f"essentially_surjective={report.essentially_surjective}",
        f"slice: {report.slice_size[0]} objects, {report.slice_size[1]} morphisms",
        f"algebras: {report.algebra_size[0]} objects, {report.algebra_size[1]} morphisms",
    ] + [f"witness: {w}" for w in report.witnesses]
    return passed("descent-classify", subject=q, notes=notes)


def descent_checks(c: FinCategory, morphisms: Sequence[str] = ()) -> List[Check]:
    targets = list(morphisms) or list(c.non_identities())
    for q in targets:
        c.dom(q)  # ObjectNotFound for an unknown --morphism
    return [lambda q=q: check_descent(c, q) for q in targets]


def lax_instances(x: FinCategory, limit: int, probes: Optional[int] = None) -> List[LaxMorphism]:
    """Lax morphisms between canonical probes, at most ``limit``."""
    window = canonical_probes(x, max(probes or 0, len(x.objects) + 2))
    found: List[LaxMorphism] = []
    for dom in window:
        for cod in window:
            found.extend(islice(iter_lax_hom(dom, cod), limit - len(found)))
            if len(found) >= limit:
                return found
    return found


@timed("lu-pullback")
def check_lu_pullback(x: FinCategory, limit: int = 12) -> CheckReport:
    instances = lax_instances(x, limit)
    bad = [m.name for m in instances if not verify_LU_pullback(m)]
    if bad:
        return failed("lu-pullback", bad, "pullback along the counit is not LU", subject=x.name)
    return passed("lu-pullback", subject=x.name, notes=[f"{len(instances)} instances"])


@timed("l-pullback-zero")
def check_l_pullback_zero(x: FinCategory, limit: int = 12) -> CheckReport:
    shapes = [terminal_category(), arrow_category()]
    window = canonical_probes(x, len(x.objects) + 2)
    checked, bad = 0, []
    for e in shapes:
        for b in shapes:
            target = L(x, b)
            for p in enumerate_functors(e, b):
                for probe in window:
                    for m in islice(iter_lax_hom(probe, target), max(limit - checked, 0)):
                        checked += 1
                        if not verify_L_pullback_zero(p, m):
                            bad.append(f"{p.name}/{m.name}")
    if bad:
        return failed("l-pullback-zero", bad, "pullback of L(p) is not constant-initial", subject=x.name)
    return passed("l-pullback-zero", subject=x.name, notes=[f"{checked} instances"])
