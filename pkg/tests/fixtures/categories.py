"""
Shared finite categories and lax objects for the laxcat test suite.

Categories:
  - one, empty, two: the shapes 𝟙, ∅ and 𝟚 (``s -u-> t``)
  - x2, x3: the chains 0 <= 1 and 0 <= m <= 1
  - v: two incomparable points
  - diamond: the four-element Boolean lattice 0 <= a, b <= 1
  - vee: a <= c >= b, where a and b have no meet
  - retract: an initial object z with a non-invertible r: a -> z

Helpers:
  - point: the lax object ``(𝟙, x)`` over a workspace
  - arrow_object: ``(𝟚, s ↦ lo, t ↦ hi)``
"""

import pytest

from laxcat.fincat.category import FinCategory, make_category
from laxcat.fincat.functor import Functor, constant_functor
from laxcat.fincat.standard import arrow_category, chain_category, empty_category, poset_category, terminal_category
from laxcat.laxcomma.objects import LaxObject

CORPUS_FILES = [
    "X2.fcat",
    "X3.fcat",
    "V.fcat",
    "diamond.fcat",
    "vee.fcat",
    "retract.fcat",
    "free.fcat",
    "one0.fcat",
    "one1.fcat",
    "lower.fcat",
]


def build_x2() -> FinCategory:
    return chain_category("X2", ["0", "1"])


def build_x3() -> FinCategory:
    return chain_category("X3", ["0", "m", "1"])


def build_diamond() -> FinCategory:
    return poset_category("D", ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def build_retract() -> FinCategory:
    return make_category(
        "Ret",
        ["z", "a"],
        [("i", "z", "a"), ("r", "a", "z"), ("e", "a", "a")],
        {
            ("r", "i"): "id_z",
            ("i", "r"): "e",
            ("e", "i"): "i",
            ("r", "e"): "r",
            ("e", "e"): "e",
        },
    )


def point(x: FinCategory, value: str) -> LaxObject:
    one = terminal_category()
    return LaxObject(one, constant_functor(one, x, value, name=f"c{value}"), name=f"(One,{value})")


def empty_object(x: FinCategory) -> LaxObject:
    nothing = empty_category()
    return LaxObject(nothing, Functor(nothing, x, {}, {}, name="!"), name="(Empty,!)")


def arrow_object(x: FinCategory, lo: str, hi: str) -> LaxObject:
    two = arrow_category()
    (u,) = x.hom(lo, hi) if lo != hi else (x.identity(lo),)
    structure = Functor(
        two,
        x,
        {"s": lo, "t": hi},
        {"id_s": x.identity(lo), "id_t": x.identity(hi), "u": u},
        name=f"a{lo}{hi}",
    )
    return LaxObject(two, structure, name=f"(Two,{lo},{hi})")


@pytest.fixture
def one() -> FinCategory:
    return terminal_category()


@pytest.fixture
def empty() -> FinCategory:
    return empty_category()


@pytest.fixture
def two() -> FinCategory:
    return arrow_category()


@pytest.fixture
def x2() -> FinCategory:
    return build_x2()


@pytest.fixture
def x3() -> FinCategory:
    return build_x3()


@pytest.fixture
def v() -> FinCategory:
    return poset_category("V", ["p", "q"], [])


@pytest.fixture
def diamond() -> FinCategory:
    return build_diamond()


@pytest.fixture
def vee() -> FinCategory:
    return poset_category("Vee", ["a", "b", "c"], [("a", "c"), ("b", "c")])


@pytest.fixture
def retract() -> FinCategory:
    return build_retract()
