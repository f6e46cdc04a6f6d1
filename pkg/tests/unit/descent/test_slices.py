"""
Tests for slices, change of base and the descent monad.
"""

import pytest

from laxcat.core.exceptions import MissingPullback, ObjectNotFound
from laxcat.descent.monad import EMAlgebra, comparison_functor, descent_monad, eilenberg_moore, is_algebra
from laxcat.descent.slice import change_of_base, slice_category, sum_functor
from laxcat.fincat.category import make_category
from laxcat.fincat.properties import are_isomorphic


@pytest.mark.unit
@pytest.mark.descent
class TestSlices:
    def test_slice_over_top_is_the_chain(self, x2):
        over = slice_category(x2, "1")

        assert over.category.objects == ("0<=1", "id_1")
        assert over.category.size == (2, 3)
        assert over.category.hom("0<=1", "id_1") == ("(0<=1,id_1)",)
        assert are_isomorphic(over.category, x2)

    def test_slice_over_bottom_is_a_point(self, x2):
        assert slice_category(x2, "0").category.size == (1, 1)

    def test_slice_over_middle(self, x3):
        over = slice_category(x3, "m")

        assert over.category.objects == ("0<=m", "id_m")
        assert over.domain("0<=m") == "0"
        assert over.underlying("(0<=m,id_m)") == "0<=m"

    def test_unknown_object(self, x2):
        with pytest.raises(ObjectNotFound):
            slice_category(x2, "m")


@pytest.mark.unit
@pytest.mark.descent
class TestChangeOfBase:
    def test_pulling_back_to_the_bottom(self, x2):
        change = change_of_base(x2, "0<=1")

        assert change.functor.omap == {"0<=1": "id_0", "id_1": "id_0"}
        assert change.squares["id_1"].apex == "0"

    def test_sum_postcomposes(self, x3):
        change = change_of_base(x3, "m<=1")
        sigma = sum_functor("m<=1", change.target, change.source)

        assert sigma.omap == {"0<=m": "0<=1", "id_m": "m<=1"}

    def test_missing_pullback(self, vee):
        # a and b have no common lower bound
        with pytest.raises(MissingPullback):
            change_of_base(vee, "b<=c")


@pytest.mark.unit
@pytest.mark.descent
class TestDescentMonad:
    @pytest.mark.parametrize("q", ["0<=m", "m<=1", "0<=1", "id_m"])
    def test_monad_laws_in_three_chain(self, x3, q):
        assert descent_monad(x3, q).check_laws() is None

    def test_perturbed_multiplication_breaks_a_law(self):
        # one object with an idempotent e; the slice object e has endomorphisms id and e
        c = make_category("Idem", ["s"], [("e", "s", "s")], {("e", "e"): "e"})
        monad = descent_monad(c, "id_s")
        assert monad.check_laws() is None

        s = monad.slice.category
        mu = monad.multiplication.components
        perturbed = None
        for m in s.objects:
            others = [h for h in s.hom(s.dom(mu[m]), s.cod(mu[m])) if h != mu[m]]
            if others:
                perturbed = dict(mu, **{m: others[0]})
                break

        assert perturbed is not None
        broken = monad.with_multiplication(perturbed)
        assert broken.multiplication.components != mu
        assert broken.check_laws() in ("left unit", "right unit", "associativity")

    def test_identity_monad(self, x2):
        monad = descent_monad(x2, "id_1")

        assert monad.functor.omap == {"0<=1": "0<=1", "id_1": "id_1"}
        assert all(monad.slice.category.is_identity(c) for c in monad.unit.components.values())

    def test_algebras(self, x2):
        monad = descent_monad(x2, "0<=1")
        em = eilenberg_moore(monad)

        assert em.algebras == {"alg0": EMAlgebra("id_0", "(id_0,id_0)")}
        assert is_algebra(monad, em.algebras["alg0"])
        assert em.category.size == (1, 1)

    def test_comparison_collapses_the_slice(self, x2):
        monad = descent_monad(x2, "0<=1")
        k = comparison_functor(monad, eilenberg_moore(monad))

        assert k.omap == {"0<=1": "alg0", "id_1": "alg0"}
