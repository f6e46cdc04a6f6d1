"""
Tests for strict initial objects, lattice structure and internal homs.
"""

import pytest

from laxcat.core.exceptions import MissingExponential, MissingProducts
from laxcat.fincat.standard import poset_category
from laxcat.univprop.checks import complete_lattice_check, join, lattice_defect, meet, strict_initial_check
from laxcat.univprop.exponential import curry, exponential_map, find_exponential, require_exponential


@pytest.mark.unit
@pytest.mark.univprop
class TestStrictInitial:
    def test_chain_has_strict_initial(self, x2):
        assert strict_initial_check(x2)

    def test_retract_is_not_strict(self, retract):
        # z is initial but r: a -> z is not invertible
        assert not strict_initial_check(retract)

    def test_no_initial_object(self, v, empty):
        assert not strict_initial_check(v)
        assert not strict_initial_check(empty)


@pytest.mark.unit
@pytest.mark.univprop
class TestLattices:
    def test_meets_and_joins(self, diamond):
        assert meet(diamond, ["a", "b"]) == "0"
        assert join(diamond, ["a", "b"]) == "1"
        assert meet(diamond, []) == "1"
        assert join(diamond, []) == "0"

    @pytest.mark.parametrize("fixture", ["one", "x2", "x3", "diamond"])
    def test_complete_lattices(self, fixture, request):
        assert complete_lattice_check(request.getfixturevalue(fixture))

    def test_discrete_pair_has_no_top(self, v):
        assert lattice_defect(v) == ("no top", ())

    def test_vee_has_no_bottom(self, vee):
        assert lattice_defect(vee) == ("no bottom", ())
        assert meet(vee, ["a", "b"]) is None

    def test_empty_category_has_no_top(self, empty):
        assert lattice_defect(empty) == ("no top", ())

    def test_retract_is_not_thin(self, retract):
        reason, witness = lattice_defect(retract)

        assert reason == "not thin"
        assert witness == ("a", "a")


@pytest.mark.unit
@pytest.mark.univprop
class TestInternalHom:
    @pytest.mark.parametrize(
        "x, y, expected",
        [
            ("m", "0", "0"),
            ("1", "m", "m"),
            ("0", "m", "1"),
            ("m", "1", "1"),
            ("m", "m", "1"),
        ],
    )
    def test_heyting_implication_in_three_chain(self, x3, x, y, expected):
        assert find_exponential(x3, x, y).apex == expected

    def test_evaluation_map(self, x3):
        exp = find_exponential(x3, "m", "0")

        assert exp.product.apex == "0"
        assert exp.ev == "id_0"

    def test_curry(self, x3):
        exp = require_exponential(x3, "m", "0")

        assert curry(x3, exp, "0", "id_0") == "id_0"

    def test_exponential_map(self, x3):
        source = require_exponential(x3, "1", "m")
        target = require_exponential(x3, "m", "1")

        assert exponential_map(x3, source, target, "m<=1", "m<=1") == "m<=1"

    def test_missing_products(self, v):
        with pytest.raises(MissingProducts):
            find_exponential(v, "p", "q")

    def test_missing_exponential(self):
        # a => 0 has no greatest candidate among 0, b and c
        m3 = poset_category(
            "M3",
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )

        assert find_exponential(m3, "a", "0") is None
        with pytest.raises(MissingExponential) as exc:
            require_exponential(m3, "a", "0")
        assert exc.value.details["x"] == "a"
