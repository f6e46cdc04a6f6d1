"""
Tests for the laxcat exception hierarchy and error codes.
"""

import pytest

from laxcat.core.exceptions import (
    ERROR_CODES,
    BijectiveFailure,
    CoequalizerNotFiniteWithinBound,
    HypothesisError,
    InputFileError,
    LaxcatError,
    LaxCommaError,
    MissingEnd,
    MissingExponential,
    MissingLimit,
    MissingProducts,
    NoInitialObject,
    NonTotalComposition,
    NotACone,
    SizeLimitExceeded,
    get_error_description,
)


@pytest.mark.unit
@pytest.mark.core
class TestLaxcatError:
    def test_message_carries_code_and_details(self):
        err = LaxcatError("something broke", error_code="CAT_001", details={"g": "u"})

        assert str(err) == "[CAT_001] something broke (g=u)"
        assert err.to_dict() == {
            "error_code": "CAT_001",
            "message": "something broke",
            "details": {"g": "u"},
            "type": "LaxcatError",
        }

    def test_default_code(self):
        assert LaxcatError("plain").error_code == "LAXCAT_000"

    def test_category_errors_name_the_category(self):
        err = NonTotalComposition("v", "u", category="X2")

        assert err.error_code == "CAT_001"
        assert err.details == {"g": "v", "f": "u", "category": "X2"}

    def test_size_guard_names_its_setting(self):
        err = SizeLimitExceeded("functors", 200_000, 100_000, "LAXCAT_ENUMERATION_LIMIT")

        assert err.details["setting"] == "LAXCAT_ENUMERATION_LIMIT"
        assert "100000" in err.message


@pytest.mark.unit
@pytest.mark.core
class TestUniversalPropertyErrors:
    def test_cone_failure(self):
        assert NotACone("x", "u").error_code == "UP_001"

    @pytest.mark.parametrize(
        "err, code",
        [
            (MissingProducts("prod(p,q)"), "UP_003"),
            (MissingExponential("a", "0"), "UP_006"),
            (MissingEnd("h0"), "UP_007"),
        ],
    )
    def test_missing_limits_share_a_base(self, err, code):
        assert isinstance(err, MissingLimit)
        assert err.error_code == code
        assert "limit" in err.details

    def test_exponential_details(self):
        err = MissingExponential("a", "0")

        assert err.details == {"x": "a", "y": "0", "limit": "a=>0"}


@pytest.mark.unit
@pytest.mark.core
class TestOtherErrors:
    def test_hypotheses(self):
        err = NoInitialObject("V")

        assert isinstance(err, HypothesisError)
        assert err.hypothesis == "initial object"
        assert err.details["category"] == "V"

    def test_bijection_failure_keeps_its_witness(self):
        err = BijectiveFailure("L -| U", ("Two", "(One,0)"), "count 2 != 1")

        assert isinstance(err, LaxCommaError)
        assert err.witness == ("Two", "(One,0)")
        assert err.error_code == "LAX_004"

    def test_bound(self):
        err = CoequalizerNotFiniteWithinBound(4, 5)

        assert err.details == {"bound": 4, "reached": 5, "setting": "LAXCAT_BOUND"}

    def test_input_file(self):
        err = InputFileError("a.fcat", "no category document")

        assert err.message == "a.fcat: no category document"

    def test_every_code_is_described(self):
        codes = [
            NotACone("x", "u").error_code,
            MissingProducts("p").error_code,
            NoInitialObject("V").error_code,
            BijectiveFailure("adj", (), "r").error_code,
            CoequalizerNotFiniteWithinBound(1, 2).error_code,
            InputFileError("p", "r").error_code,
        ]
        assert all(code in ERROR_CODES for code in codes)
        assert get_error_description("NOPE") == "Unknown error code"
