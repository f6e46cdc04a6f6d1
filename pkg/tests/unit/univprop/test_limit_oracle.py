"""
Tests for the brute-force limit oracle and the named limits built on it.
"""

import pytest

from laxcat.core.exceptions import MissingProducts, NotACone
from laxcat.presentation.elaborate import load_file
from laxcat.univprop.diagram import (
    Cocone,
    Cone,
    Diagram,
    all_limit_apexes,
    find_colimit,
    find_limit,
    is_colimit,
    is_limit,
    iter_cones,
    limit_failure,
    mediate,
)
from laxcat.univprop.limits import (
    Coequalizer,
    Equalizer,
    binary_coproduct,
    binary_product,
    coequalizer,
    equalizer,
    initial_object,
    pairing,
    product_of,
    pullback,
    require_product,
    terminal_object,
)


@pytest.mark.unit
@pytest.mark.univprop
class TestTerminalAndInitial:
    def test_chain(self, x2, x3):
        assert terminal_object(x2) == "1"
        assert initial_object(x2) == "0"
        assert terminal_object(x3) == "1"

    def test_discrete_pair_has_neither(self, v):
        assert terminal_object(v) is None
        assert initial_object(v) is None

    def test_retract_zero_object(self, retract):
        # hom(a, z) = {r} and hom(z, a) = {i}
        assert initial_object(retract) == "z"
        assert terminal_object(retract) == "z"

    def test_empty_category(self, empty):
        assert terminal_object(empty) is None


@pytest.mark.unit
@pytest.mark.univprop
class TestConeOracle:
    def test_product_cone_in_x2(self, x2):
        d = Diagram.discrete(x2, ["0", "1"])
        cone = Cone("0", {"0": "id_0", "1": "0<=1"})

        assert is_limit(d, cone)
        assert limit_failure(d, cone) is None

    def test_cone_that_does_not_commute(self, x2):
        d = Diagram.discrete(x2, ["0", "1"])

        with pytest.raises(NotACone) as exc:
            is_limit(d, Cone("1", {"0": "id_1", "1": "id_1"}))
        assert exc.value.details["apex"] == "1"

    def test_non_universal_cone(self, x3):
        d = Diagram.discrete(x3, ["m", "1"])
        cone = Cone("0", {"0": "0<=m", "1": "0<=1"})

        test, reason = limit_failure(d, cone)
        assert test == "m"
        assert "factor" in reason

    def test_cones_are_enumerated_in_order(self, x3):
        d = Diagram.discrete(x3, ["m", "1"])

        assert [c.apex for c in iter_cones(d, "0")] == ["0"]
        assert list(iter_cones(d, "1")) == []

    def test_find_limit_and_colimit(self, x2):
        d = Diagram.discrete(x2, ["0", "1"])

        assert find_limit(d).apex == "0"
        cocone = find_colimit(d)
        assert cocone.apex == "1"
        assert is_colimit(d, Cocone(cocone.apex, cocone.legs))

    def test_missing_limit_is_none(self, v):
        d = Diagram.discrete(v, ["p", "q"])

        assert find_limit(d) is None
        assert all_limit_apexes(d) == []

    def test_empty_diagram_limit_is_terminal(self, x3):
        assert find_limit(Diagram.empty(x3)).apex == "1"
        assert find_colimit(Diagram.empty(x3)).apex == "0"

    def test_mediating_morphism(self, x3):
        d = Diagram.discrete(x3, ["m", "1"])
        limit = find_limit(d)

        assert limit.apex == "m"
        assert mediate(d, limit, Cone("0", {"0": "0<=m", "1": "0<=1"})) == "0<=m"


@pytest.mark.unit
@pytest.mark.univprop
class TestNamedLimits:
    def test_binary_product_is_meet(self, x2, diamond):
        product = binary_product(x2, "0", "1")

        assert product.apex == "0"
        assert (product.p1, product.p2) == ("id_0", "0<=1")
        assert binary_product(diamond, "a", "b").apex == "0"
        assert binary_coproduct(diamond, "a", "b").apex == "1"

    def test_require_product_raises(self, v):
        with pytest.raises(MissingProducts):
            require_product(v, "p", "q")

    def test_family_products(self, x3):
        assert product_of(x3, []).apex == "1"
        assert product_of(x3, ["m"]).projections == ("id_m",)

        family = product_of(x3, ["1", "m", "0"])
        assert family.apex == "0"
        assert family.projections == ("0<=1", "0<=m", "id_0")

    def test_pairing(self, x3):
        family = product_of(x3, ["m", "1"])

        assert pairing(x3, family, ["0<=m", "0<=1"], "0") == "0<=m"

    def test_pullback_in_diamond(self, diamond):
        square = pullback(diamond, "a<=1", "b<=1")

        assert square.apex == "0"
        assert (square.left, square.right) == ("0<=a", "0<=b")

    def test_retract_equalizer_and_coequalizer(self, retract):
        assert equalizer(retract, "e", "id_a") == Equalizer("z", "i")
        assert coequalizer(retract, "e", "id_a") == Coequalizer("z", "r")

    def test_free_category_has_no_equalizer_of_distinct_paths(self, corpus_dir):
        path = load_file(corpus_dir / "free.fcat")["Path"]
        parallel = [
            (f, g)
            for f in path.non_identities()
            for g in path.non_identities()
            if f < g and path.dom(f) == path.dom(g) and path.cod(f) == path.cod(g)
        ]

        for f, g in parallel:
            assert equalizer(path, f, g) is None
