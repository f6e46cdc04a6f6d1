"""
Tests for finite categories: construction, validation and size guards.
"""

import pandas as pd
import pytest

from laxcat.core.exceptions import (
    AssociativityViolation,
    CategoryError,
    IdentityLawViolation,
    NonTotalComposition,
    ObjectNotFound,
    SizeLimitExceeded,
)
from laxcat.core.settings import get_config
from laxcat.fincat.category import (
    categories_equal_up_to_order,
    check_category_laws,
    check_size,
    composable_pairs,
    make_category,
    validate_category,
)
from laxcat.fincat.standard import chain_category, free_category, poset_category

X2_RAW = {
    "name": "X2",
    "objects": ["0", "1"],
    "morphisms": [{"name": "0<=1", "dom": "0", "cod": "1"}],
    "composites": [],
}


@pytest.mark.unit
@pytest.mark.fincat
class TestValidateCategory:
    """validate_category on raw data."""

    def test_x2_raw_data_is_valid(self):
        x2 = validate_category(X2_RAW)

        assert x2.objects == ("0", "1")
        assert x2.size == (2, 3)
        assert x2.identity("0") == "id_0"
        assert x2.compose("0<=1", "id_0") == "0<=1"

    def test_redirected_identity_composite(self):
        raw = dict(X2_RAW, composites=[{"g": "id_1", "f": "0<=1", "result": "id_0"}])

        with pytest.raises(IdentityLawViolation) as exc:
            validate_category(raw)
        assert exc.value.error_code.startswith("CAT")

    def test_missing_composite(self):
        raw = {
            "name": "Bad",
            "objects": ["a", "b", "c"],
            "morphisms": [
                {"name": "f", "dom": "a", "cod": "b"},
                {"name": "g", "dom": "b", "cod": "c"},
            ],
        }

        with pytest.raises(NonTotalComposition):
            validate_category(raw)

    def test_unknown_object(self):
        raw = {"name": "Bad", "objects": ["a"], "morphisms": [{"name": "f", "dom": "a", "cod": "z"}]}

        with pytest.raises(ObjectNotFound) as exc:
            validate_category(raw)
        assert exc.value.details["name"] == "z"

    def test_unknown_domain_in_make_category(self):
        with pytest.raises(ObjectNotFound) as exc:
            make_category("Bad", ["a"], [("f", "q", "a")], {})
        assert exc.value.error_code == "CAT_007"

    def test_non_associative_table(self):
        # (f∘e)∘e = k∘e = k but f∘(e∘e) = f
        bad = make_category(
            "Bad",
            ["a", "b"],
            [("e", "a", "a"), ("f", "a", "b"), ("k", "a", "b")],
            {("e", "e"): "id_a", ("f", "e"): "k", ("k", "e"): "k"},
        )

        with pytest.raises(AssociativityViolation):
            check_category_laws(bad)

    def test_existing_category_is_rechecked(self, x3):
        assert validate_category(x3) is x3

    def test_bad_object_name_rejected(self):
        with pytest.raises(ValueError):
            validate_category({"name": "Bad", "objects": ["a b"]})


@pytest.mark.unit
@pytest.mark.fincat
class TestFinCategory:
    """Structure queries and equality."""

    def test_hom_and_out_of(self, x3):
        assert x3.hom("0", "1") == ("0<=1",)
        assert x3.hom("1", "0") == ()
        assert x3.out_of("m") == ("id_m", "m<=1")

    def test_compose_path(self, x3):
        assert x3.compose_path("m<=1", "0<=m") == "0<=1"

    def test_thin_and_leq(self, x3, retract):
        assert x3.is_thin()
        assert x3.leq("0", "m")
        assert not x3.leq("1", "m")
        assert not retract.is_thin()

    def test_isomorphisms(self, retract):
        assert retract.is_iso("id_a")
        assert not retract.is_iso("r")
        assert retract.inverse("e") is None

    def test_equality_ignores_name(self, x2):
        assert chain_category("Other", ["0", "1"]) == x2
        assert hash(chain_category("Other", ["0", "1"])) == hash(x2)

    def test_renamed_keeps_structure(self, x3):
        renamed = x3.renamed("W")

        assert renamed.name == "W"
        assert renamed == x3

    def test_declaration_order_matters_for_equality(self):
        first = poset_category("P", ["a", "b"], [])
        second = poset_category("P", ["b", "a"], [])

        assert first != second
        assert categories_equal_up_to_order(first, second)

    def test_hom_counts_frame(self, x2):
        counts = x2.hom_counts()

        assert isinstance(counts, pd.DataFrame)
        assert counts.loc["0", "1"] == 1
        assert counts.loc["1", "0"] == 0

    def test_composable_pairs_cover_table(self, x3):
        assert set(composable_pairs(x3)) == set(x3.table)

    def test_duplicate_object_rejected(self):
        with pytest.raises(CategoryError):
            make_category("Bad", ["a", "a"], [], {})


@pytest.mark.unit
@pytest.mark.fincat
class TestSizeGuards:
    """Configured object and morphism caps."""

    def test_objects_over_cap(self, x3):
        get_config().limits.max_objects = 2

        with pytest.raises(SizeLimitExceeded) as exc:
            check_size(x3)
        assert "LAXCAT_MAX_OBJECTS" in exc.value.format_message()

    def test_morphisms_over_cap(self, x3):
        get_config().limits.max_morphisms = 5

        with pytest.raises(SizeLimitExceeded):
            check_size(x3)

    def test_within_caps(self, x3):
        assert check_size(x3) is x3


@pytest.mark.unit
@pytest.mark.fincat
class TestStandardCategories:
    """Posets and free categories."""

    def test_three_chain_has_six_morphisms(self):
        assert chain_category("X3", ["0", "m", "1"]).size == (3, 6)

    def test_poset_is_transitively_closed(self):
        p = poset_category("P", ["a", "b", "c"], [("a", "b"), ("b", "c")])

        assert p.hom("a", "c") == ("a<=c",)

    def test_antisymmetry_enforced(self):
        with pytest.raises(CategoryError):
            poset_category("P", ["a", "b"], [("a", "b"), ("b", "a")])

    def test_free_category_paths(self):
        path = free_category("Path", ["a", "b", "c"], [("e1", "a", "b"), ("e2", "b", "c"), ("k", "a", "c")])

        assert path.hom("a", "c") == ("k", "e2:e1")
        assert path.compose("e2", "e1") == "e2:e1"

    def test_free_category_rejects_cycles(self):
        with pytest.raises(CategoryError):
            free_category("Loop", ["a", "b"], [("f", "a", "b"), ("g", "b", "a")])
