"""
Tests for elaboration of parsed documents into validated values.
"""

import pytest

from laxcat.core.exceptions import (
    CyclicGraph,
    FunctorLawViolation,
    IdentityLawViolation,
    InvalidDocument,
    NotAntisymmetric,
    UnknownReference,
)
from laxcat.fincat.category import FinCategory
from laxcat.fincat.functor import Functor, NatTrans
from laxcat.presentation.elaborate import load_file, loads


@pytest.mark.unit
@pytest.mark.presentation
class TestElaborateCategories:
    def test_three_chain_from_generators(self, x3):
        (value,) = loads("poset X3 { 0 <= m; m <= 1 }").values()

        assert value.size == (3, 6)
        assert value == x3

    def test_poset_cycle_is_rejected(self):
        with pytest.raises(NotAntisymmetric) as exc:
            loads("poset P {\n  a <= b;\n  b <= a;\n}")
        assert exc.value.line == 3

    def test_freeacyclic(self):
        (value,) = loads("freeacyclic G { objects: a b c; edges: f : a -> b; g : b -> c; }").values()

        assert value.hom("a", "c") == ("g:f",)

    def test_freeacyclic_cycle(self):
        with pytest.raises(CyclicGraph) as exc:
            loads("freeacyclic G { objects: a b; edges: f : a -> b; g : b -> a; }")
        assert exc.value.details["cycle"][0] == "b"

    def test_law_violation_is_located(self):
        text = "category C {\n  objects: a;\n  morphisms:\n    e : a -> a;\n  compose:\n    e e = id_a;\n    e id_a = id_a;\n}"

        with pytest.raises(IdentityLawViolation) as exc:
            loads(text)
        assert exc.value.details["line"] == 1

    def test_named_identity(self):
        (value,) = loads("category C { objects: a; identities: one : a; }").values()

        assert value.identity("a") == "one"


@pytest.mark.unit
@pytest.mark.presentation
class TestElaborateFunctors:
    TEXT = (
        "poset X2 { 0 <= 1 }\n"
        "category W { objects: pt; }\n"
        "functor a : W -> X2 { objects: pt = 0; }\n"
        "functor b : W -> X2 { objects: pt = 1; }\n"
        "nattrans g : a => b { components: pt = 0<=1; }\n"
    )

    def test_values_in_document_order(self):
        values = loads(self.TEXT)

        assert list(values) == ["X2", "W", "a", "b", "g"]
        assert isinstance(values["X2"], FinCategory)
        assert isinstance(values["a"], Functor)
        assert isinstance(values["g"], NatTrans)
        assert values["g"]["pt"] == "0<=1"

    def test_environment_resolves_workspace(self, x2):
        values = loads("category W { objects: pt; }\nfunctor a : W -> X2 { objects: pt = 1; }", {"X2": x2})

        assert values["a"].target == x2
        assert "X2" not in values

    def test_unknown_target(self):
        with pytest.raises(UnknownReference):
            loads("category W { objects: pt; }\nfunctor a : W -> X9 { objects: pt = 1; }")

    def test_wrong_kind_reference(self):
        with pytest.raises(InvalidDocument):
            loads("category W { objects: pt; }\nfunctor a : W -> W { objects: pt = pt; }\nfunctor b : a -> W { }")

    def test_identity_implicit_but_functoriality_checked(self):
        text = (
            "category W { objects: s t; morphisms: u : s -> t; }\n"
            "poset X2 { 0 <= 1 }\n"
            "functor a : W -> X2 { objects: s = 1; t = 0; }\n"
        )

        with pytest.raises(FunctorLawViolation):
            loads(text)


@pytest.mark.unit
@pytest.mark.presentation
class TestCorpus:
    def test_workspaces_load(self, corpus_dir):
        for name, size in [("X2", (2, 3)), ("X3", (3, 6)), ("V", (2, 2)), ("diamond", (4, 9))]:
            (value,) = load_file(corpus_dir / f"{name}.fcat").values()
            assert value.size == size

    def test_retract_has_non_strict_initial(self, corpus_dir, retract):
        (value,) = load_file(corpus_dir / "retract.fcat").values()

        assert value == retract
