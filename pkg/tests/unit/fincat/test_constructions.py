"""
Tests for opposite, product, coproduct, functor, comma, pullback and
equalizer categories.
"""

import pytest

from laxcat.fincat.constructions import (
    comma_over,
    copair_functors,
    coproduct_category,
    coproduct_injections,
    equalizer_category,
    functor_category,
    opposite,
    pair_functors,
    product_category,
    product_projections,
    pullback_category,
)
from laxcat.fincat.category import check_category_laws
from laxcat.fincat.functor import Functor, compose_functors, constant_functor, validate_functor
from laxcat.fincat.properties import are_isomorphic


@pytest.mark.unit
@pytest.mark.fincat
class TestOpposite:
    def test_order_reversed(self, x2):
        op = opposite(x2)

        assert op.hom("1", "0") == ("0<=1",)
        assert op.hom("0", "1") == ()
        check_category_laws(op)

    def test_involution(self, x3):
        assert opposite(opposite(x3)) == x3


@pytest.mark.unit
@pytest.mark.fincat
class TestProductsAndCoproducts:
    def test_product_sizes(self, two, x2):
        product = product_category(two, x2)

        assert product.size == (4, 9)
        check_category_laws(product)

    def test_projections_and_pairing(self, two, x2):
        product = product_category(two, x2)
        left, right = product_projections(product, two, x2)
        diagonal = pair_functors(left, right, product)

        validate_functor(left)
        validate_functor(right)
        assert compose_functors(left, diagonal) == left

    def test_coproduct_names(self, one, x2):
        total = coproduct_category(one, x2)
        inl, inr = coproduct_injections(total, one, x2)

        assert total.objects == ("inl:pt", "inr:0", "inr:1")
        assert inr.omap["1"] == "inr:1"
        validate_functor(inl)

    def test_copairing(self, one, x2):
        total = coproduct_category(one, x2)
        inl, inr = coproduct_injections(total, one, x2)
        copair = copair_functors(constant_functor(one, x2, "1"), constant_functor(x2, x2, "1"), total)

        assert compose_functors(copair, inl).omap == {"pt": "1"}
        assert set(copair.omap.values()) == {"1"}


@pytest.mark.unit
@pytest.mark.fincat
class TestFunctorCategory:
    def test_point_exponent(self, one, x2):
        assert are_isomorphic(functor_category(one, x2), x2)

    def test_arrow_exponent(self, two, x2):
        assert functor_category(two, x2).size == (3, 6)

    def test_empty_exponent(self, empty, x2):
        assert functor_category(empty, x2).size == (1, 1)

    def test_tags_recover_functors(self, two, x2):
        cat = functor_category(two, x2)
        first = cat.object_tag("h0")

        assert isinstance(first, Functor)
        assert first.omap == {"s": "0", "t": "0"}


@pytest.mark.unit
@pytest.mark.fincat
class TestCommaAndPullback:
    def test_comma_over_top(self, one, x2):
        comma = comma_over(constant_functor(one, x2, "0"), "1")

        assert comma.category.objects == ("(pt,0<=1)",)
        assert comma.legs["(pt,0<=1)"] == "0<=1"

    def test_comma_of_identity_over_top(self, two):
        comma = comma_over(Functor(two, two, {"s": "s", "t": "t"}, {m: m for m in two.morphisms}), "t")

        assert len(comma.category.objects) == 2
        check_category_laws(comma.category)

    def test_pullback_of_points(self, one, x2):
        bottom = constant_functor(one, x2, "0")
        square = pullback_category(bottom, bottom)

        assert square.category.size == (1, 1)
        assert compose_functors(bottom, square.left) == compose_functors(bottom, square.right)

    def test_empty_pullback(self, one, x2):
        square = pullback_category(constant_functor(one, x2, "0"), constant_functor(one, x2, "1"))

        assert square.category.objects == ()

    def test_equalizer(self, two, x2):
        low = constant_functor(two, x2, "0")
        high = Functor(two, x2, {"s": "0", "t": "1"}, {"id_s": "id_0", "id_t": "id_1", "u": "0<=1"})
        category, inclusion = equalizer_category(low, high)

        assert category.objects == ("s",)
        assert compose_functors(low, inclusion) == compose_functors(high, inclusion)
