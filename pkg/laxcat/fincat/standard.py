"""
Standard finite categories: small shapes, posets and free categories
on acyclic graphs.
"""

from typing import Dict, Iterable, List, Sequence, Set, Tuple

from laxcat.core.exceptions import CategoryError
from laxcat.core.utils.naming import NameAllocator, identity_name, path_name
from laxcat.fincat.category import FinCategory, make_category

# ============================================================================
# SHAPES
# ============================================================================


def terminal_category(name: str = "One", point: str = "pt") -> FinCategory:
    """The category with one object and its identity."""
    return make_category(name, [point], [], {})


def empty_category(name: str = "Empty") -> FinCategory:
    return make_category(name, [], [], {})


def arrow_category(name: str = "Two") -> FinCategory:
    """Objects ``s``, ``t`` and one non-identity arrow ``u: s -> t``."""
    return make_category(name, ["s", "t"], [("u", "s", "t")], {})


def discrete_category(objects: Sequence[str], name: str = "Disc") -> FinCategory:
    return make_category(name, list(objects), [], {})


def parallel_pair(name: str = "Par") -> FinCategory:
    """Shape of (co)equalizers: ``u, v: 0 -> 1``."""
    return make_category(name, ["0", "1"], [("u", "0", "1"), ("v", "0", "1")], {})


def cospan_category(name: str = "Cospan") -> FinCategory:
    """Shape of pullbacks: ``l: 0 -> 2 <- 1: r``."""
    return make_category(name, ["0", "1", "2"], [("l", "0", "2"), ("r", "1", "2")], {})


def span_category(name: str = "Span") -> FinCategory:
    """Shape of pushouts: ``0 <- 2 -> 1``."""
    return make_category(name, ["0", "1", "2"], [("l", "2", "0"), ("r", "2", "1")], {})


# ============================================================================
# POSETS
# ============================================================================


def order_closure(elements: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> Set[Tuple[str, str]]:
    """Reflexive-transitive closure of a relation (Warshall)."""
    leq = {(a, a) for a in elements}
    leq.update(pairs)
    for k in elements:
        for i in elements:
            if (i, k) not in leq:
                continue
            for j in elements:
                if (k, j) in leq:
                    leq.add((i, j))
    return leq


def poset_category(
    name: str, elements: Sequence[str], pairs: Iterable[Tuple[str, str]]
) -> FinCategory:
    """
    The thin category of the order generated by ``pairs``.

    Morphisms are named ``id_<a>`` and ``<a><=<b>``.

    Raises:
        CategoryError: if the closure is not antisymmetric
    """
    leq = order_closure(elements, pairs)
    for a in elements:
        for b in elements:
            if a != b and (a, b) in leq and (b, a) in leq:
                raise CategoryError(f"'{a}' and '{b}' are identified by the order", category=name)

    def arrow(a: str, b: str) -> str:
        return identity_name(a) if a == b else f"{a}<={b}"

    morphisms = [
        (arrow(a, b), a, b) for a in elements for b in elements if a != b and (a, b) in leq
    ]
    composites = {
        (arrow(b, c), arrow(a, b)): arrow(a, c)
        for a in elements
        for b in elements
        for c in elements
        if (a, b) in leq and (b, c) in leq
    }
    return make_category(name, list(elements), morphisms, composites)


def chain_category(name: str, elements: Sequence[str]) -> FinCategory:
    """A total order ``e0 <= e1 <= ...``."""
    return poset_category(name, elements, zip(elements, elements[1:]))


# ============================================================================
# FREE CATEGORIES
# ============================================================================


def free_category(
    name: str, objects: Sequence[str], edges: Sequence[Tuple[str, str, str]]
) -> FinCategory:
    """
    The free category on a finite acyclic multigraph.

    Paths of length >= 2 are named by their edges in applicative order
    joined with ``:`` (first ``e1`` then ``e2`` gives ``e2:e1``).

    Raises:
        CategoryError: if the graph has a directed cycle
    """
    out: Dict[str, List[Tuple[str, str, str]]] = {x: [] for x in objects}
    for e in edges:
        out[e[1]].append(e)

    paths: List[Tuple[str, ...]] = []
    endpoints: Dict[Tuple[str, ...], Tuple[str, str]] = {}

    def walk(start: str, path: Tuple[str, ...], at: str) -> None:
        if len(path) > len(edges):
            raise CategoryError("Graph has a directed cycle", category=name)
        for e, _, c in out[at]:
            extended = path + (e,)
            paths.append(extended)
            endpoints[extended] = (start, c)
            walk(start, extended, c)

    for x in objects:
        walk(x, (), x)

    edge_index = {e[0]: i for i, e in enumerate(edges)}
    paths.sort(key=lambda p: (len(p), [edge_index[e] for e in p]))

    allocator = NameAllocator([identity_name(x) for x in objects] + [e[0] for e in edges])
    names: Dict[Tuple[str, ...], str] = {}
    for p in paths:
        names[p] = p[0] if len(p) == 1 else allocator.claim(path_name(reversed(p)))

    morphisms = [(names[p], endpoints[p][0], endpoints[p][1]) for p in paths]
    composites = {}
    for p in paths:
        for q in paths:
            if endpoints[p][1] == endpoints[q][0]:
                composites[(names[q], names[p])] = names[p + q]
    return make_category(name, list(objects), morphisms, composites)
