"""
Property suites over generated instances.

These run many small constructions end to end and are marked ``slow``;
run them with ``pytest -m integration``.
"""

from itertools import combinations_with_replacement, islice, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures.categories import arrow_object, point
from laxcat.core.exceptions import CoequalizerNotFiniteWithinBound
from laxcat.core.types import DescentClass, Verdict
from laxcat.descent.classify import classify_descent, pullback_stability
from laxcat.fincat.category import check_category_laws, validate_category
from laxcat.fincat.enumerate import enumerate_functors, enumerate_nat_trans
from laxcat.fincat.functor import compose_functors
from laxcat.fincat.standard import free_category, poset_category
from laxcat.laxcomma.adjunction import l_adjunction, r_adjunction, verify_adjunction, verify_triangle_identities
from laxcat.laxcomma.objects import LaxObject, compose_lax, enumerate_lax_hom
from laxcat.laxstruct.coequalizer import coequalizer_laxcomma
from laxcat.laxstruct.colimits import coproduct_laxcomma, initial_laxcomma
from laxcat.laxstruct.construction import canonical_probes
from laxcat.laxstruct.exponential import exponential_laxcomma, verify_currying, verify_currying_naturality
from laxcat.laxstruct.kan import left_kan
from laxcat.laxstruct.limits import product_laxcomma, pullback_laxcomma, terminal_laxcomma
from laxcat.presentation.elaborate import loads
from laxcat.presentation.serialize import serialize
from laxcat.toolkit.checks import check_l_pullback_zero, check_lu_pullback, check_topologicity
from laxcat.toolkit.io import dump_lax_object

WORKSPACES = ["x2", "x3", "diamond"]


@st.composite
def posets(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    elements = [f"e{i}" for i in range(n)]
    candidates = [(a, b) for i, a in enumerate(elements) for b in elements[i + 1:]]
    pairs = draw(st.lists(st.sampled_from(candidates), max_size=len(candidates))) if candidates else []
    return poset_category("P", elements, pairs)


@st.composite
def free_categories(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    objects = [f"v{i}" for i in range(n)]
    candidates = [(a, b) for i, a in enumerate(objects) for b in objects[i + 1:]]
    ends = draw(st.lists(st.sampled_from(candidates), max_size=3)) if candidates else []
    return free_category("G", objects, [(f"f{k}", a, b) for k, (a, b) in enumerate(ends)])


def lax_objects(x) -> list:
    """Points and arrow objects over x, in declaration order."""
    objects = [point(x, a) for a in x.objects]
    for f in x.non_identities():
        objects.append(arrow_object(x, x.dom(f), x.cod(f)))
    return objects


def structures(x, w) -> list:
    return [LaxObject(w, a, name=f"({w.name},{a.name})") for a in enumerate_functors(w, x)]


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.presentation
class TestCategoryLaws:
    @settings(max_examples=100, deadline=None)
    @given(st.one_of(posets(), free_categories()))
    def test_round_trip_keeps_the_laws(self, c):
        text = serialize(c)
        again = loads(text)[c.name]

        assert again == c
        assert serialize(again) == text
        assert validate_category(again) is again
        check_category_laws(again)


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.laxstruct
class TestConstructionsAgainstOracle:
    @pytest.fixture(params=WORKSPACES)
    def x(self, request):
        return request.getfixturevalue(request.param)

    def test_terminal_and_initial(self, x):
        assert terminal_laxcomma(x).verify(canonical_probes(x, 3))
        assert initial_laxcomma(x).verify(canonical_probes(x, 3))

    def test_products(self, x):
        pairs = list(islice(combinations_with_replacement(lax_objects(x), 2), 20))

        for first, second in pairs:
            assert product_laxcomma(first, second).verify(canonical_probes(x, 3)), (first.name, second.name)

    def test_coproducts(self, x):
        pairs = list(islice(combinations_with_replacement(lax_objects(x), 2), 20))

        for first, second in pairs:
            assert coproduct_laxcomma(first, second).verify(canonical_probes(x, 3)), (first.name, second.name)

    def test_pullbacks(self, x):
        objects = lax_objects(x)
        checked = 0
        for cod in objects:
            into = [m for dom in objects for m in enumerate_lax_hom(dom, cod)]
            for f, g in combinations_with_replacement(into, 2):
                assert pullback_laxcomma(f, g).verify(canonical_probes(x, 3)), (f.name, g.name)
                checked += 1
        assert checked >= 20


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.laxstruct
class TestExponentials:
    def test_currying_is_a_bijection(self, x3, empty, one, two):
        bases = structures(x3, empty) + structures(x3, one) + structures(x3, two)
        params = structures(x3, empty) + structures(x3, one)

        for source in bases:
            for target in bases:
                exp = exponential_laxcomma(source, target)
                for z in params:
                    assert verify_currying(exp, product_laxcomma(source, z))

    def test_currying_is_natural(self, x3, empty, one, two):
        bases = structures(x3, empty) + structures(x3, one) + structures(x3, two)
        params = structures(x3, one)

        for source in bases:
            for target in bases:
                exp = exponential_laxcomma(source, target)
                for z, other in product(params, repeat=2):
                    assert verify_currying_naturality(
                        exp, product_laxcomma(source, z), product_laxcomma(source, other)
                    )


DIAMOND_ELEMENTS = ["0", "a", "b", "1"]
DIAMOND_PAIRS = [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]


def constructed_outputs(x) -> list:
    """Serialized product, coequalizer and exponential apexes over a diamond."""
    (to_a,) = enumerate_lax_hom(point(x, "0"), point(x, "a"))
    (to_b,) = enumerate_lax_hom(point(x, "0"), point(x, "b"))
    both = coproduct_laxcomma(point(x, "a"), point(x, "b"))
    fork = coequalizer_laxcomma(compose_lax(both.leg("0"), to_a), compose_lax(both.leg("1"), to_b))
    return [
        dump_lax_object(product_laxcomma(arrow_object(x, "a", "1"), point(x, "b")).apex),
        dump_lax_object(fork.apex),
        dump_lax_object(exponential_laxcomma(arrow_object(x, "0", "a"), point(x, "b")).apex),
    ]


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.laxstruct
class TestDeclarationOrder:
    @settings(max_examples=25, deadline=None)
    @given(st.permutations(DIAMOND_ELEMENTS), st.permutations(DIAMOND_PAIRS))
    def test_outputs_ignore_declaration_order(self, elements, pairs):
        expected = constructed_outputs(poset_category("D", DIAMOND_ELEMENTS, DIAMOND_PAIRS))
        shuffled = poset_category("D", elements, pairs)

        assert constructed_outputs(shuffled) == expected


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.laxstruct
class TestKanAdjunction:
    def test_hom_counts_agree(self, x2, x3, one, two):
        along = enumerate_functors(one, two) + enumerate_functors(two, two)
        instances = 0
        for x in (x2, x3):
            for f in along:
                for a in enumerate_functors(f.source, x):
                    lan = left_kan(f, a).extension
                    for b in enumerate_functors(f.target, x):
                        restricted = compose_functors(b, f)
                        assert len(enumerate_nat_trans(lan, b)) == len(enumerate_nat_trans(a, restricted))
                    instances += 1
        assert instances >= 20


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.laxstruct
class TestCoequalizers:
    def test_stable_pairs_are_colimits(self, x2):
        objects = lax_objects(x2) + [coproduct_laxcomma(point(x2, "0"), point(x2, "0")).apex]
        verified = 0
        for dom in objects:
            for cod in objects:
                for f, g in combinations_with_replacement(enumerate_lax_hom(dom, cod), 2):
                    try:
                        fork = coequalizer_laxcomma(f, g)
                    except CoequalizerNotFiniteWithinBound:
                        continue
                    assert fork.verify(canonical_probes(x2, 3)), (f.name, g.name)
                    verified += 1
        assert verified >= 10


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.laxcomma
class TestAdjointChain:
    def test_four_object_window_over_x2(self, x2, empty, one, two):
        categories = [empty, one, two]
        objects = canonical_probes(x2, 4)

        assert len(objects) == 4
        for adj in (l_adjunction(x2, categories, objects), r_adjunction(x2, objects, categories)):
            assert verify_adjunction(adj)
            assert verify_triangle_identities(adj)


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.descent
class TestDescent:
    @pytest.fixture(params=WORKSPACES)
    def c(self, request):
        return request.getfixturevalue(request.param)

    def test_identities_are_effective(self, c):
        for x in c.objects:
            assert classify_descent(c, c.identity(x)).grade == DescentClass.EFFECTIVE_DESCENT

    def test_grades_are_cumulative(self, c):
        for q in c.morphisms:
            report = classify_descent(c, q)
            if report.grade.at_least(DescentClass.ALMOST_DESCENT):
                assert report.faithful
            if report.grade.at_least(DescentClass.DESCENT):
                assert report.full
            if report.grade == DescentClass.EFFECTIVE_DESCENT:
                assert report.essentially_surjective

    def test_effective_descent_is_pullback_stable(self, c):
        for q in c.morphisms:
            if classify_descent(c, q).grade != DescentClass.EFFECTIVE_DESCENT:
                continue
            assert set(pullback_stability(c, q).values()) <= {DescentClass.EFFECTIVE_DESCENT}, q

    @pytest.mark.parametrize("workspace", ["x2", "x3"])
    def test_transfer_along_l_and_lu(self, request, workspace):
        x = request.getfixturevalue(workspace)

        lu = check_lu_pullback(x, limit=12)
        assert lu.verdict == Verdict.PASS
        assert lu.notes == ["12 instances"]
        assert check_l_pullback_zero(x, limit=12).verdict == Verdict.PASS


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.toolkit
class TestTopologicity:
    @pytest.mark.parametrize("workspace", WORKSPACES)
    def test_complete_lattices(self, request, workspace):
        report = check_topologicity(request.getfixturevalue(workspace))

        assert report.verdict == Verdict.PASS

    @pytest.mark.parametrize("workspace", ["v", "vee"])
    def test_missing_meets_or_bounds(self, request, workspace):
        report = check_topologicity(request.getfixturevalue(workspace))

        assert report.verdict == Verdict.FAIL
        assert report.witnesses[0].startswith("family(")
