"""
Coequalizers in Cat and in Cat//X.

The Cat-coequalizer of ``f, g: W -> Y`` identifies ``f(w) ~ g(w)`` on
objects and is presented by generators (the non-identity morphisms of Y)
and relations (the composition table of Y, and ``f(u) = g(u)``). Its
hom-sets are enumerated per source class by coset enumeration on the
right action of the generators. The quotient may be infinite; nodes whose
defining path is longer than the saturation bound abort the enumeration.

The lax coequalizer then takes ``lan_j b`` and coequalizes, pointwise in
X, the mates of ``(η*f)·γ`` and ``(η*g)·χ``.
"""

from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from laxcat.core.exceptions import (
    CoequalizerNotFiniteWithinBound,
    MissingColimit,
    NotParallel,
    SizeLimitExceeded,
)
from laxcat.core.settings import get_limits
from laxcat.core.utils.logger import get_logger
from laxcat.core.utils.naming import NameAllocator, path_name
from laxcat.fincat.category import FinCategory, check_size
from laxcat.fincat.functor import Functor, NatTrans, compose_functors, vertical_compose, whisker_right
from laxcat.fincat.standard import parallel_pair
from laxcat.laxcomma.objects import LaxMorphism, LaxObject, compose_lax, lax_morphism
from laxcat.laxstruct.construction import COLIMIT, Construction
from laxcat.laxstruct.kan import left_kan, mate
from laxcat.univprop.limits import coequalizer, coequalizer_mediator

logger = get_logger(__name__)

Word = Tuple[str, ...]


class CatCoequalizer(NamedTuple):
    """The quotient category C with its quotient functor ``j: Y -> C``."""

    category: FinCategory
    quotient: Functor


# ============================================================================
# COSET ENUMERATION
# ============================================================================


class _Enumeration:
    """
    Morphisms out of one object class of the quotient.

    Node 0 is the identity; an edge ``n --g--> n'`` means ``g∘n = n'``.
    """

    def __init__(
        self,
        start: str,
        generators: Dict[str, List[str]],
        relations: Dict[str, List[Tuple[Word, Word]]],
        target_class: Dict[str, str],
        bound: int,
    ):
        self.generators = generators
        self.relations = relations
        self.target_class = target_class
        self.bound = bound
        self.limits = get_limits()
        self.cod: List[str] = [start]
        self.depth: List[int] = [0]
        self.edges: List[Dict[str, int]] = [{}]
        self.parent: List[int] = [0]
        self.reached = 0

    def find(self, n: int) -> int:
        root = n
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[n] != root:
            self.parent[n], n = root, self.parent[n]
        return root

    def follow(self, n: int, g: str) -> Optional[int]:
        target = self.edges[self.find(n)].get(g)
        return None if target is None else self.find(target)

    def define(self, n: int, g: str) -> int:
        n = self.find(n)
        depth = self.depth[n] + 1
        self.reached = max(self.reached, depth)
        if depth > self.bound:
            raise CoequalizerNotFiniteWithinBound(self.bound, depth)
        if len(self.parent) >= self.limits.enumeration_limit:
            raise SizeLimitExceeded(
                "coequalizer nodes", len(self.parent), self.limits.enumeration_limit, "LAXCAT_ENUMERATION_LIMIT"
            )
        new = len(self.parent)
        self.cod.append(self.target_class[g])
        self.depth.append(depth)
        self.edges.append({})
        self.parent.append(new)
        self.edges[n][g] = new
        return new

    def trace(self, n: int, word: Word, extend: bool = True) -> int:
        n = self.find(n)
        for g in word:
            step = self.follow(n, g)
            if step is None:
                if not extend:
                    raise KeyError(g)
                step = self.define(n, g)
            n = step
        return self.find(n)

    def coincidence(self, a: int, b: int) -> None:
        pending = [(a, b)]
        while pending:
            a, b = pending.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            keep, drop = min(a, b), max(a, b)
            self.parent[drop] = keep
            self.depth[keep] = min(self.depth[keep], self.depth[drop])
            for g, target in self.edges[drop].items():
                if g in self.edges[keep]:
                    pending.append((self.edges[keep][g], target))
                else:
                    self.edges[keep][g] = target
            self.edges[drop] = {}

    def live(self) -> List[int]:
        return [n for n in range(len(self.parent)) if self.find(n) == n]

    def run(self) -> "_Enumeration":
        i = 0
        while i < len(self.parent):
            if self.find(i) == i:
                for lhs, rhs in self.relations.get(self.cod[i], ()):
                    left, right = self.trace(i, lhs), self.trace(i, rhs)
                    if left != right:
                        self.coincidence(left, right)
            if self.find(i) == i:
                for g in self.generators.get(self.cod[i], ()):
                    if self.follow(i, g) is None:
                        self.define(i, g)
            if len(self.live()) > self.limits.max_morphisms:
                raise SizeLimitExceeded(
                    "coequalizer morphisms", len(self.live()), self.limits.max_morphisms, "LAXCAT_MAX_MORPHISMS"
                )
            i += 1
        return self

    def words(self) -> Dict[int, Word]:
        """Shortlex-least defining path of every live node."""
        found: Dict[int, Word] = {0: ()}
        queue = [0]
        for n in queue:
            for g in self.generators.get(self.cod[n], ()):
                t = self.follow(n, g)
                if t is not None and t not in found:
                    found[t] = found[n] + (g,)
                    queue.append(t)
        return found


def _classes(y: FinCategory, pairs: Sequence[Tuple[str, str]]) -> Dict[str, str]:
    """Object -> least object of its class under the generated equivalence."""
    rep = {o: o for o in y.objects}

    def root(o: str) -> str:
        while rep[o] != o:
            o = rep[o]
        return o

    for p, q in pairs:
        rp, rq = root(p), root(q)
        if rp != rq:
            keep, drop = sorted((rp, rq), key=y.object_index)
            rep[drop] = keep
    return {o: root(o) for o in y.objects}


def cat_coequalizer(f: Functor, g: Functor, bound: Optional[int] = None) -> CatCoequalizer:
    """
    The coequalizer of two parallel functors in Cat.

    Objects of C are named after the least object of their class, and
    morphisms after the shortest, then first, path of generators reaching
    them (a single generator keeps its own name).

    Raises:
        NotParallel: if f and g are not parallel
        CoequalizerNotFiniteWithinBound: if some hom-set needs paths
            longer than ``bound`` (default ``LimitsConfig.saturation_bound``)
        SizeLimitExceeded: if the quotient outgrows the size guards
    """
    if not f.parallel_to(g):
        raise NotParallel(f.name, g.name)
    bound = get_limits().saturation_bound if bound is None else bound
    w, y = f.source, f.target
    cls = _classes(y, [(f.omap[o], g.omap[o]) for o in w.objects])

    def word(m: str) -> Word:
        return () if y.is_identity(m) else (m,)

    generators: Dict[str, List[str]] = {}
    target_class: Dict[str, str] = {}
    for m in y.non_identities():
        generators.setdefault(cls[y.dom(m)], []).append(m)
        target_class[m] = cls[y.cod(m)]
    relations: Dict[str, List[Tuple[Word, Word]]] = {}
    for (second, first), h in y.table.items():
        if not y.is_identity(first) and not y.is_identity(second):
            relations.setdefault(cls[y.dom(first)], []).append(((first, second), word(h)))
    for u in w.non_identities():
        lhs, rhs = word(f.mmap[u]), word(g.mmap[u])
        if lhs != rhs:
            relations.setdefault(cls[f.omap[w.dom(u)]], []).append((lhs, rhs))

    reps = [o for o in y.objects if cls[o] == o]
    runs = {
        k: _Enumeration(k, generators, relations, target_class, bound).run() for k in reps
    }

    names = NameAllocator()
    node_names: Dict[str, Dict[int, str]] = {}
    paths: Dict[str, Dict[int, Word]] = {}
    decls: List[Tuple[str, str, str]] = []
    identities: Dict[str, str] = {}
    for k in reps:
        run = runs[k]
        paths[k] = run.words()
        node_names[k] = {}
        for n, path in paths[k].items():
            if not path:
                label = names.claim(y.identity(k))
                identities[k] = label
            else:
                label = names.claim(path_name(reversed(path)))
            node_names[k][n] = label
            decls.append((label, k, run.cod[n]))

    table: Dict[Tuple[str, str], str] = {}
    for k in reps:
        run = runs[k]
        for n, first in node_names[k].items():
            middle = run.cod[n]
            for n2, second in node_names[middle].items():
                table[(second, first)] = node_names[k][run.trace(n, paths[middle][n2], extend=False)]

    category = check_size(
        FinCategory(f"coeq({f.name},{g.name})", reps, decls, identities, table)
    )
    mmap = {}
    for m in y.morphisms:
        k = cls[y.dom(m)]
        mmap[m] = identities[k] if y.is_identity(m) else node_names[k][runs[k].follow(0, m)]
    quotient = Functor(y, category, {o: cls[o] for o in y.objects}, mmap, name="j")
    logger.debug(
        f"Cat-coequalizer of {f.name},{g.name}: {len(reps)} objects, {len(decls)} morphisms, "
        f"depth {max(r.reached for r in runs.values()) if runs else 0}"
    )
    return CatCoequalizer(category, quotient)


# ============================================================================
# LAX COEQUALIZER
# ============================================================================


def coequalizer_laxcomma(f: LaxMorphism, g: LaxMorphism, bound: Optional[int] = None) -> Construction:
    """
    Coequalizer of parallel ``(f, γ), (g, χ): (W, a) -> (Y, b)``.

    With ``j: Y -> C`` the Cat-coequalizer and ``η: b => lan_j b ∘ j``:

    - ``ψ1``, ``ψ2: lan_{jf} a => lan_j b`` are the mates of ``(η*f)·γ``
      and ``(η*g)·χ`` (``jf = jg``);
    - ``d`` is their pointwise coequalizer ``q``;
    - the quotient morphism is ``(j, (q*j)·η)``.

    Raises:
        NotParallel: if f and g are not parallel
        CoequalizerNotFiniteWithinBound: from the Cat-coequalizer
        MissingColimit: if a Kan extension or pointwise coequalizer is missing
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise NotParallel(f.name, g.name)
    x = f.dom.workspace
    a, b = f.dom.structure, f.cod.structure
    quotient = cat_coequalizer(f.functor, g.functor, bound)
    j, c = quotient.quotient, quotient.category
    jf = compose_functors(j, f.functor)
    if jf != compose_functors(j, g.functor):
        raise NotParallel(f"{j.name}{f.functor.name}", f"{j.name}{g.functor.name}")

    lan_b = left_kan(j, b)
    lan_a = left_kan(jf, a)
    ext = lan_b.extension
    psi = [
        mate(vertical_compose(whisker_right(lan_b.unit, m.functor), m.cell), lan_a, ext).mate
        for m in (f, g)
    ]

    forks = {}
    for obj in c.objects:
        fork = coequalizer(x, psi[0].components[obj], psi[1].components[obj])
        if fork is None:
            raise MissingColimit(obj)
        forks[obj] = fork
    mmap = {}
    for k in c.morphisms:
        source, target = forks[c.dom(k)], forks[c.cod(k)]
        m = coequalizer_mediator(x, source, x.compose(target.map, ext.mmap[k]))
        if m is None:
            raise MissingColimit(c.dom(k))
        mmap[k] = m
    d = Functor(c, x, {obj: e.apex for obj, e in forks.items()}, mmap, name="d")
    q = NatTrans(ext, d, {obj: e.map for obj, e in forks.items()}, name="q")

    apex = LaxObject(c, d, name=f"coeq({f.name},{g.name})")
    components = {v: x.compose(q.components[j.omap[v]], lan_b.unit.components[v]) for v in f.cod.base.objects}
    leg = lax_morphism(f.cod, apex, j, components, name="q")
    return Construction(
        "coequalizer",
        COLIMIT,
        parallel_pair(),
        {"0": f.dom, "1": f.cod},
        {"u": f, "v": g},
        apex,
        {"0": compose_lax(leg, f), "1": leg},
    )
