"""
Tests for L ⊣ U ⊣ R, windows of Cat//X and cartesian lifts.
"""

from dataclasses import replace

import pytest

from fixtures.categories import arrow_object, point
from laxcat.core.exceptions import BijectiveFailure, NoInitialObject, NoTerminalObject, ObjectNotFound
from laxcat.fincat.enumerate import enumerate_functors
from laxcat.fincat.functor import Functor, identity_functor
from laxcat.laxcomma.adjunction import (
    L,
    R,
    find_lax_isomorphism,
    iota,
    l_adjunction,
    l_preserves_terminal,
    lax_isomorphic,
    r_adjunction,
    tau,
    verify_adjunction,
    verify_triangle_identities,
)
from laxcat.laxcomma.fibration import (
    cartesian_lift,
    factorization_failure,
    is_cartesian,
    restrict,
    vertical_factorization,
)
from laxcat.laxcomma.objects import U, compose_lax, enumerate_lax_hom, identity_lax, is_strict, lax_morphism
from laxcat.laxcomma.truncation import Truncation, strict_subcategory


@pytest.fixture
def shapes(empty, one, two):
    return [empty, one, two]


@pytest.fixture
def x2_window(x2):
    return [point(x2, "0"), point(x2, "1"), arrow_object(x2, "0", "1")]


@pytest.mark.unit
@pytest.mark.laxcomma
class TestConstantAdjoints:
    def test_l_is_constant_at_bottom(self, one, x2):
        lone = L(x2, one)

        assert lone.structure.omap == {"pt": "0"}
        assert U(lone) == one

    def test_r_is_constant_at_top(self, two, x2):
        rtwo = R(x2, two)

        assert rtwo.structure.omap == {"s": "1", "t": "1"}
        assert rtwo.structure.mmap["u"] == "id_1"

    def test_missing_bounds(self, one, v):
        with pytest.raises(NoInitialObject):
            L(v, one)
        with pytest.raises(NoTerminalObject):
            R(v, one)

    def test_l_on_functors_is_strict(self, two, x2):
        for f in enumerate_functors(two, two):
            assert is_strict(L(x2, f))
            assert U(L(x2, f)) == f

    def test_unit_and_counit_cells(self, x2):
        o = arrow_object(x2, "0", "1")

        assert iota(o).cell.components == {"s": "id_0", "t": "0<=1"}
        assert tau(o).cell.components == {"s": "0<=1", "t": "id_1"}
        assert U(iota(o)) == identity_functor(o.base)

    def test_l_preserves_terminal_only_for_trivial_workspace(self, one, x2):
        assert l_preserves_terminal(one)
        assert not l_preserves_terminal(x2)

    def test_lax_isomorphism(self, one, two, x2):
        assert lax_isomorphic(point(x2, "0"), L(x2, one))
        assert not lax_isomorphic(point(x2, "0"), point(x2, "1"))
        assert find_lax_isomorphism(point(x2, "1"), R(x2, two)) is None


@pytest.mark.unit
@pytest.mark.laxcomma
class TestAdjunctionVerifier:
    def test_l_adjunction_on_window(self, x2, shapes, x2_window):
        adj = l_adjunction(x2, shapes, x2_window)

        assert verify_adjunction(adj)
        assert verify_triangle_identities(adj)

    def test_r_adjunction_on_window(self, x2, shapes, x2_window):
        adj = r_adjunction(x2, x2_window, shapes)

        assert verify_adjunction(adj)
        assert verify_triangle_identities(adj)

    def test_hom_counts_agree(self, x2, two, x2_window):
        for o in x2_window:
            assert len(enumerate_lax_hom(L(x2, two), o)) == len(enumerate_functors(two, o.base))
            assert len(enumerate_lax_hom(o, R(x2, two))) == len(enumerate_functors(o.base, two))

    def test_corrupted_unit_is_caught(self, x2, shapes, x2_window):
        adj = l_adjunction(x2, shapes, x2_window)
        # the first functor Two -> Two is constant at s
        broken = replace(adj, unit=lambda w: enumerate_functors(w, w)[0])

        with pytest.raises(BijectiveFailure) as exc:
            verify_adjunction(broken)
        assert exc.value.witness[0] == "Two"

    def test_triangles_need_a_counit(self, x2, shapes, x2_window):
        adj = replace(l_adjunction(x2, shapes, x2_window), counit=None)

        with pytest.raises(BijectiveFailure):
            verify_triangle_identities(adj)


@pytest.mark.unit
@pytest.mark.laxcomma
class TestTruncation:
    def test_duplicates_are_dropped(self, x2):
        window = Truncation([point(x2, "0"), point(x2, "1"), point(x2, "0")])

        assert len(window) == 2
        assert window.category.objects == ("o0", "o1")
        assert window.category.size == (2, 3)
        assert window.category.hom("o0", "o1") == ("m0_1_0",)

    def test_window_names_round_trip(self, x2, x2_window):
        window = Truncation(x2_window)
        m = window.morphism("m0_1_0")

        assert window.name_of(m) == "m0_1_0"
        assert window.lax_object("o2") == x2_window[2]
        assert window.object_name(x2_window[1]) == "o1"

    def test_unknown_object(self, x2):
        with pytest.raises(ObjectNotFound):
            Truncation([point(x2, "0")]).index(point(x2, "1"))

    def test_category_laws_hold_on_window(self, x2, x2_window):
        window = Truncation(x2_window + [L(x2, x2_window[2].base)])

        assert window.check_laws().objects == ("o0", "o1", "o2", "o3")

    def test_strict_subcategory(self, x2):
        window = Truncation([point(x2, "0"), point(x2, "1")])

        assert strict_subcategory(window).size == (2, 2)


@pytest.mark.unit
@pytest.mark.laxcomma
class TestCartesianLifts:
    def test_lift_along_identity_is_identity(self, x2):
        o = arrow_object(x2, "0", "1")

        assert cartesian_lift(o, identity_functor(o.base)) == identity_lax(o)

    def test_restriction_to_source(self, one, two, x2):
        at_s = Functor(one, two, {"pt": "s"}, {"id_pt": "id_s"})

        assert restrict(arrow_object(x2, "0", "1"), at_s).at("pt") == "0"

    def test_vertical_factorization(self, x2):
        for m in enumerate_lax_hom(point(x2, "0"), arrow_object(x2, "0", "1")):
            vertical, lift = vertical_factorization(m)

            assert U(vertical) == identity_functor(m.dom.base)
            assert is_strict(lift)
            assert compose_lax(lift, vertical) == m

    def test_lifts_are_cartesian(self, one, two, x2, x2_window):
        window = Truncation(x2_window)
        for f in enumerate_functors(one, two):
            assert is_cartesian(cartesian_lift(x2_window[2], f), window)

    def test_lax_cell_is_not_cartesian(self, one, x2, x2_window):
        m = lax_morphism(point(x2, "0"), point(x2, "1"), identity_functor(one), {"pt": "0<=1"})

        probe, reason = factorization_failure(m, Truncation(x2_window))
        assert probe == "(One,1)"
        assert reason.startswith("no factorization")
