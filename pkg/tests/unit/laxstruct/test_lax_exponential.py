"""
Tests for exponentials in Cat//X and currying through them.
"""

import pytest

from fixtures.categories import arrow_object, empty_object, point
from laxcat.core.exceptions import MissingExponential
from laxcat.fincat.standard import poset_category
from laxcat.laxcomma.objects import enumerate_lax_hom
from laxcat.laxstruct.exponential import (
    curry_lax,
    exponential_laxcomma,
    uncurry_lax,
    verify_currying,
    verify_currying_naturality,
)
from laxcat.laxstruct.limits import product_laxcomma


SHAPES = {
    "empty": empty_object,
    "one": lambda x: point(x, "1"),
    "two": lambda x: arrow_object(x, "0", "1"),
}


@pytest.mark.unit
@pytest.mark.laxstruct
class TestExponentialObject:
    def test_points_give_the_internal_hom(self, x3):
        exp = exponential_laxcomma(point(x3, "m"), point(x3, "0"))

        assert exp.apex.base.objects == ("h0",)
        assert exp.apex.at("h0") == "0"
        assert exp.ends["h0"].apex == "0"

    def test_arrow_base_gives_one_value_per_functor(self, x3):
        exp = exponential_laxcomma(point(x3, "m"), arrow_object(x3, "0", "1"))

        assert exp.apex.base.objects == ("h0", "h1")
        assert exp.apex.structure.omap == {"h0": "0", "h1": "1"}
        assert exp.functor("h1").omap == {"pt": "t"}
        assert exp.hom("pt", "h0").apex == "0"

    def test_missing_internal_hom(self):
        m3 = poset_category(
            "M3",
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )

        with pytest.raises(MissingExponential):
            exponential_laxcomma(point(m3, "a"), point(m3, "0"))


@pytest.mark.unit
@pytest.mark.laxstruct
class TestCurrying:
    def test_points(self, x3):
        exponent, base = point(x3, "m"), point(x3, "0")
        exp = exponential_laxcomma(exponent, base)

        assert verify_currying(exp, product_laxcomma(exponent, point(x3, "0")))
        assert verify_currying(exp, product_laxcomma(exponent, point(x3, "1")))

    def test_arrow_base(self, x3):
        exponent = point(x3, "m")
        exp = exponential_laxcomma(exponent, arrow_object(x3, "0", "1"))
        product = product_laxcomma(exponent, point(x3, "1"))

        assert verify_currying(exp, product)
        (m,) = enumerate_lax_hom(product.apex, exp.target)
        curried = curry_lax(exp, product, m)
        assert curried.functor.omap == {"pt": "h1"}
        assert uncurry_lax(exp, product, curried) == m

    def test_naturality_in_the_parameter(self, x3):
        exponent = point(x3, "m")
        exp = exponential_laxcomma(exponent, arrow_object(x3, "0", "1"))
        product = product_laxcomma(exponent, point(x3, "1"))
        other = product_laxcomma(exponent, point(x3, "m"))

        assert verify_currying_naturality(exp, product, other)

    @pytest.mark.parametrize("source_shape", sorted(SHAPES))
    @pytest.mark.parametrize("target_shape", sorted(SHAPES))
    def test_naturality_for_every_base_pair(self, x2, source_shape, target_shape):
        source, target = SHAPES[source_shape](x2), SHAPES[target_shape](x2)
        exp = exponential_laxcomma(source, target)
        params = [point(x2, "0"), point(x2, "1")]

        for z in params:
            for other in params:
                assert verify_currying_naturality(
                    exp, product_laxcomma(source, z), product_laxcomma(source, other)
                )
