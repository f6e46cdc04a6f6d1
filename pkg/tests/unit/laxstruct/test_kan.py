"""
Tests for pointwise left Kan extensions, mates and opcartesian lifts.
"""

import pytest

from fixtures.categories import point
from laxcat.core.exceptions import MissingColimit, ShapeMismatch
from laxcat.fincat.enumerate import enumerate_functors, enumerate_nat_trans
from laxcat.fincat.functor import Functor, compose_functors, constant_functor, identity_functor
from laxcat.laxcomma.adjunction import verify_adjunction, verify_triangle_identities
from laxcat.laxcomma.objects import is_strict
from laxcat.laxstruct.kan import lan_adjunction, lan_counit, left_kan, mate, opcartesian_lift


@pytest.fixture
def at_s(one, two) -> Functor:
    return Functor(one, two, {"pt": "s"}, {"id_pt": "id_s"}, name="at_s")


@pytest.fixture
def at_t(one, two) -> Functor:
    return Functor(one, two, {"pt": "t"}, {"id_pt": "id_t"}, name="at_t")


@pytest.fixture
def rising(two, x2) -> Functor:
    return Functor(two, x2, {"s": "0", "t": "1"}, {"id_s": "id_0", "id_t": "id_1", "u": "0<=1"}, name="b")


@pytest.mark.unit
@pytest.mark.laxstruct
class TestLeftKan:
    def test_along_source_copies_forward(self, one, x2, at_s):
        lan = left_kan(at_s, constant_functor(one, x2, "0"))

        assert lan.extension.omap == {"s": "0", "t": "0"}
        assert lan.extension.mmap["u"] == "id_0"
        assert lan.unit.components == {"pt": "id_0"}
        assert all(cert.check() for cert in lan.certificates.values())

    def test_along_target_starts_at_bottom(self, one, x2, at_t):
        lan = left_kan(at_t, constant_functor(one, x2, "1"))

        assert lan.extension.omap == {"s": "0", "t": "1"}
        assert lan.extension.mmap["u"] == "0<=1"

    def test_along_identity(self, two, x2, rising):
        lan = left_kan(identity_functor(two), rising)

        assert lan.extension == rising
        assert lan.unit.is_identity()

    def test_missing_bottom(self, one, v, at_t):
        with pytest.raises(MissingColimit) as exc:
            left_kan(at_t, constant_functor(one, v, "p"))
        assert exc.value.details["colimit"] == "s"

    def test_sources_must_agree(self, two, x2, at_s, rising):
        with pytest.raises(ShapeMismatch):
            left_kan(at_s, rising)


@pytest.mark.unit
@pytest.mark.laxstruct
class TestLanAdjunction:
    def test_hom_counts_agree(self, one, two, x2, at_s):
        for a in enumerate_functors(one, x2):
            lan = left_kan(at_s, a).extension
            for b in enumerate_functors(two, x2):
                restricted = compose_functors(b, at_s)
                assert len(enumerate_nat_trans(lan, b)) == len(enumerate_nat_trans(a, restricted))

    def test_adjunction_and_triangles(self, one, two, x2, at_t):
        adj = lan_adjunction(at_t, enumerate_functors(one, x2), enumerate_functors(two, x2))

        assert verify_adjunction(adj)
        assert verify_triangle_identities(adj)

    def test_mate_of_unit_is_identity(self, one, x2, at_s):
        lan = left_kan(at_s, constant_functor(one, x2, "1"))
        cell = mate(lan.unit, lan, lan.extension)

        assert cell.mate.is_identity()
        assert cell.check()

    def test_counit(self, at_s, rising):
        counit = lan_counit(at_s, rising)

        assert counit.components == {"s": "id_0", "t": "0<=1"}

    def test_mate_checks_its_target(self, one, x2, at_s, rising):
        lan = left_kan(at_s, constant_functor(one, x2, "1"))

        with pytest.raises(ShapeMismatch):
            mate(lan.unit, lan, rising)


@pytest.mark.unit
@pytest.mark.laxstruct
class TestOpcartesianLift:
    def test_lift_pushes_structure_forward(self, x2, at_t):
        lift = opcartesian_lift(point(x2, "1"), at_t)

        assert lift.cod.structure.omap == {"s": "0", "t": "1"}
        assert lift.component("pt") == "id_1"
        assert is_strict(lift)

    def test_lift_along_identity_is_identity_on_structure(self, one, x2):
        lift = opcartesian_lift(point(x2, "0"), identity_functor(one))

        assert lift.cod == point(x2, "0")
