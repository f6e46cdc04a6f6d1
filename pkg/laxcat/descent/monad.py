"""
The descent monad ``T = q*∘Σ_q`` on ``C/u`` and its Eilenberg-Moore category.

Unit and multiplication come from ``Σ_q ⊣ q*``. Algebras are enumerated
exhaustively over carriers and candidate structure maps; the comparison
functor ``K: C/v -> EM(T)`` sends n to ``(q*n, q*ε_n)``.
"""

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

from laxcat.core.exceptions import MissingPullback
from laxcat.core.utils.logger import get_logger
from laxcat.core.utils.naming import pair_name
from laxcat.descent.slice import BaseChange, SliceCategory, change_of_base, sum_functor
from laxcat.fincat.category import FinCategory, check_size
from laxcat.fincat.enumerate import guarded
from laxcat.fincat.functor import Functor, NatTrans, compose_functors, identity_functor
from laxcat.univprop.limits import pullback_mediator

logger = get_logger(__name__)


@dataclass(frozen=True)
class DescentMonad:
    """
    ``(T, η, μ)`` on ``C/u`` for ``q: u -> v``.

    Attributes:
        q: The morphism
        change: ``q*`` with its slices and pullback squares
        sigma: ``Σ_q``
        functor: ``T = q*∘Σ_q``
        unit: ``η: id => T``
        multiplication: ``μ: TT => T``
    """

    q: str
    change: BaseChange
    sigma: Functor
    functor: Functor
    unit: NatTrans
    multiplication: NatTrans

    @property
    def slice(self) -> SliceCategory:
        return self.change.target

    def check_laws(self) -> Optional[str]:
        """
        The first failing monad law, or None.

        Laws are checked componentwise: ``μ∘Tη = id`` ("left unit"),
        ``μ∘ηT = id`` ("right unit") and ``μ∘Tμ = μ∘μT`` ("associativity").
        """
        s = self.slice.category
        t, eta, mu = self.functor, self.unit.components, self.multiplication.components
        for m in s.objects:
            tm = t.omap[m]
            if s.compose(mu[m], t.mmap[eta[m]]) != s.identity(tm):
                return "left unit"
            if s.compose(mu[m], eta[tm]) != s.identity(tm):
                return "right unit"
            if s.compose(mu[m], t.mmap[mu[m]]) != s.compose(mu[m], mu[tm]):
                return "associativity"
        return None

    def with_multiplication(self, components: Dict[str, str]) -> "DescentMonad":
        """A copy with the multiplication replaced by ``components``."""
        mu = NatTrans(self.multiplication.source, self.multiplication.target, components, name="mu'")
        return DescentMonad(self.q, self.change, self.sigma, self.functor, self.unit, mu)


def descent_monad(c: FinCategory, q: str) -> DescentMonad:
    """
    Build ``(T, η, μ)`` for ``q: u -> v``.

    Raises:
        MissingPullback: if ``q*`` is not defined
    """
    change = change_of_base(c, q)
    over_u, over_v = change.target, change.source
    sigma = sum_functor(q, over_u, over_v)
    t = compose_functors(change.functor, sigma, name=f"T_{q}")

    eta = {}
    for m in over_u.category.objects:
        square = change.squares[sigma.omap[m]]
        x = over_u.domain(m)
        mediator = pullback_mediator(c, square, c.identity(x), m)
        if mediator is None:
            raise MissingPullback(m)
        eta[m] = over_u.morphism(mediator, t.omap[m])
    epsilon = {n: over_v.morphism(square.left, n) for n, square in change.squares.items()}
    mu = {m: change.functor.mmap[epsilon[sigma.omap[m]]] for m in over_u.category.objects}

    unit = NatTrans(identity_functor(over_u.category), t, eta, name="eta")
    multiplication = NatTrans(compose_functors(t, t), t, mu, name="mu")
    return DescentMonad(q, change, sigma, t, unit, multiplication)


# ============================================================================
# EILENBERG-MOORE
# ============================================================================


class EMAlgebra(NamedTuple):
    """A T-algebra: carrier in ``C/u`` and structure ``T(carrier) -> carrier``."""

    carrier: str
    structure: str


class EilenbergMoore(NamedTuple):
    """``EM(T)`` with its algebras, indexed by object name."""

    category: FinCategory
    algebras: Dict[str, EMAlgebra]

    def find(self, algebra: EMAlgebra) -> Optional[str]:
        for name, candidate in self.algebras.items():
            if candidate == algebra:
                return name
        return None


def is_algebra(monad: DescentMonad, algebra: EMAlgebra) -> bool:
    s = monad.slice.category
    t, eta, mu = monad.functor, monad.unit.components, monad.multiplication.components
    m, h = algebra
    return s.compose(h, eta[m]) == s.identity(m) and s.compose(h, t.mmap[h]) == s.compose(h, mu[m])


def eilenberg_moore(monad: DescentMonad) -> EilenbergMoore:
    """
    Enumerate ``EM(T)``.

    Objects are named ``alg<i>``; a morphism ``f`` of carriers between
    algebras i and j is named ``(f,i,j)``.

    Raises:
        SizeLimitExceeded: above the enumeration limit or the size guards
    """
    s = monad.slice.category
    t = monad.functor
    candidates = (
        EMAlgebra(m, h) for m in s.objects for h in s.hom(t.omap[m], m)
    )
    algebras = [a for a in guarded(candidates, "algebra candidates") if is_algebra(monad, a)]
    names = {f"alg{i}": a for i, a in enumerate(algebras)}

    decls: List[Tuple[str, str, str]] = []
    tags: Dict[Tuple[str, str, str], str] = {}
    identities = {}
    for i, (m, h) in enumerate(algebras):
        for j, (m2, h2) in enumerate(algebras):
            for f in s.hom(m, m2):
                if s.compose(f, h) == s.compose(h2, t.mmap[f]):
                    label = pair_name(f, str(i), str(j))
                    tags[(f, str(i), str(j))] = label
                    decls.append((label, f"alg{i}", f"alg{j}"))
        identities[f"alg{i}"] = pair_name(s.identity(m), str(i), str(i))
    table = {}
    for (f, i, j), first in tags.items():
        for (g, j2, k), second in tags.items():
            if j2 == j:
                table[(second, first)] = tags[(s.compose(g, f), i, k)]
    category = check_size(
        FinCategory(f"EM({t.name})", list(names), decls, identities, table, morphism_tags=tags)
    )
    logger.debug(f"EM({t.name}): {len(algebras)} algebras, {len(decls)} morphisms")
    return EilenbergMoore(category, names)


def comparison_functor(monad: DescentMonad, em: EilenbergMoore) -> Functor:
    """``K: C/v -> EM(T)``, ``n ↦ (q*n, q*ε_n)``."""
    change = monad.change
    over_v = change.source
    qstar = change.functor
    epsilon = {n: over_v.morphism(square.left, n) for n, square in change.squares.items()}
    omap = {}
    for n in over_v.category.objects:
        name = em.find(EMAlgebra(qstar.omap[n], qstar.mmap[epsilon[n]]))
        if name is None:
            raise ValueError(f"q*(epsilon_{n}) is not an algebra structure")
        omap[n] = name
    mmap = {}
    for f in over_v.category.morphisms:
        i = omap[over_v.category.dom(f)][3:]
        j = omap[over_v.category.cod(f)][3:]
        mmap[f] = em.category.tagged_morphism((qstar.mmap[f], i, j))
    return Functor(over_v.category, em.category, omap, mmap, name="K")

