"""
Tests for the property checks behind ``laxcat check``.
"""

import pytest

from fixtures.categories import point
from laxcat.core.types import Verdict
from laxcat.fincat.functor import identity_functor
from laxcat.laxstruct.colimits import coproduct_laxcomma
from laxcat.laxstruct.construction import canonical_probes
from laxcat.toolkit.checks import (
    check_adjunctions,
    check_descent,
    check_extensivity,
    check_l_pullback_zero,
    check_lattice,
    check_lu_pullback,
    check_strict_initial,
    check_topologicity,
    descent_checks,
    extensivity_instances,
    point_families,
    run_batch,
)
from laxcat.toolkit.lifts import initial_lift, lift_failure
from laxcat.toolkit.report import passed


@pytest.mark.unit
@pytest.mark.toolkit
class TestOrderChecks:
    def test_lattice_passes(self, x3):
        report = check_lattice(x3)

        assert report.verdict == Verdict.PASS
        assert report.subject == "X3"
        assert report.elapsed_ms >= 0

    def test_lattice_fails_with_family(self, v):
        report = check_lattice(v)

        assert report.verdict == Verdict.FAIL
        assert report.reason == "no top"
        assert report.witnesses == ["family()"]

    def test_strict_initial(self, x2, retract, v):
        assert check_strict_initial(x2).verdict == Verdict.PASS

        report = check_strict_initial(retract)
        assert report.verdict == Verdict.FAIL
        assert report.witnesses == ["r"]

        assert check_strict_initial(v).witnesses == ["no initial object"]


@pytest.mark.unit
@pytest.mark.toolkit
class TestTopologicity:
    def test_point_families(self, x2):
        families = list(point_families(x2))

        assert families[0] == []
        assert ["0", "1"] in families
        assert len(families) == 1 + 2 + 3

    def test_lift_of_two_points_is_their_meet(self, one, x3):
        from_point = [(identity_functor(one), point(x3, "m")), (identity_functor(one), point(x3, "1"))]

        lift = initial_lift(one, x3, from_point)
        assert lift.apex.at("pt") == "m"
        assert lift_failure(lift, from_point, canonical_probes(x3, 4)) == ""

    def test_chain_is_topological(self, x2):
        report = check_topologicity(x2)

        assert report.verdict == Verdict.PASS
        assert report.notes == ["finite-scale verdict"]
        assert report.probes == ["(One,0)", "(One,1)", "(Two,p0)"]

    def test_discrete_pair_is_not(self, v):
        report = check_topologicity(v)

        assert report.verdict == Verdict.FAIL
        assert report.witnesses == ["family()"]


@pytest.mark.unit
@pytest.mark.toolkit
class TestAdjunctionAndDescentChecks:
    def test_adjunctions_on_chain(self, x2):
        report = check_adjunctions(x2)

        assert report.verdict == Verdict.PASS
        assert len(report.probes) == 3

    def test_adjunctions_skip_without_bounds(self, v):
        report = check_adjunctions(v)

        assert report.verdict == Verdict.SKIPPED
        assert report.reason

    def test_descent_notes(self, x2):
        report = check_descent(x2, "0<=1")

        assert report.verdict == Verdict.PASS
        assert report.notes[0] == "grade: almost-descent"
        assert report.subject == "0<=1"

    def test_one_descent_check_per_morphism(self, x3):
        assert len(descent_checks(x3)) == 3
        assert len(descent_checks(x3, ["m<=1"])) == 1

    def test_lu_pullback(self, x2, retract):
        assert check_lu_pullback(x2, limit=6).verdict == Verdict.PASS
        assert check_lu_pullback(retract, limit=6).verdict == Verdict.SKIPPED

    def test_l_pullback_zero(self, x2):
        assert check_l_pullback_zero(x2, limit=6).verdict == Verdict.PASS


@pytest.mark.unit
@pytest.mark.toolkit
class TestExtensivity:
    def test_sum_of_points(self, x2):
        coproduct = coproduct_laxcomma(point(x2, "0"), point(x2, "1"))
        instances = extensivity_instances(coproduct, canonical_probes(x2, 3), limit=6)

        assert len(instances) == 6
        for m in instances:
            assert check_extensivity(coproduct, m).verdict == Verdict.PASS


@pytest.mark.unit
@pytest.mark.toolkit
class TestRunBatch:
    @pytest.mark.parametrize("workers", [1, 3])
    def test_order_is_kept(self, workers):
        checks = [lambda i=i: passed("c", subject=str(i)) for i in range(5)]

        assert [r.subject for r in run_batch(checks, workers)] == ["0", "1", "2", "3", "4"]
