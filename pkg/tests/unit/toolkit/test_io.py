"""
Tests for reading and writing workspaces, lax objects and lax morphisms.
"""

import pytest

from fixtures.categories import point
from laxcat.core.exceptions import InputFileError
from laxcat.laxcomma.objects import is_strict
from laxcat.toolkit.io import (
    dump_lax_morphism,
    dump_lax_object,
    load_lax_morphism,
    load_lax_object,
    load_workspace,
    write_text,
)


@pytest.fixture
def workspace(corpus_dir):
    return load_workspace(corpus_dir / "X2.fcat")


@pytest.mark.unit
@pytest.mark.toolkit
class TestReading:
    def test_workspace_matches_fixture(self, workspace, x2):
        assert workspace.objects == x2.objects
        assert workspace.morphisms == x2.morphisms

    def test_lax_object(self, corpus_dir, workspace, x2):
        o = load_lax_object(corpus_dir / "one0.fcat", workspace)

        assert o.name == "one0"
        assert o.at("pt") == "0"
        assert o.structure.omap == point(x2, "0").structure.omap

    def test_lax_morphism(self, corpus_dir, workspace):
        m = load_lax_morphism(corpus_dir / "lower.fcat", workspace)

        assert m.name == "lower"
        assert m.component("pt") == "0<=1"
        assert m.dom.at("pt") == "0"
        assert m.cod.at("pt") == "1"
        assert not is_strict(m)

    def test_object_file_without_structure(self, corpus_dir, workspace):
        with pytest.raises(InputFileError):
            load_lax_object(corpus_dir / "X3.fcat", workspace)

    def test_object_file_is_not_a_morphism(self, corpus_dir, workspace):
        with pytest.raises(InputFileError):
            load_lax_morphism(corpus_dir / "one0.fcat", workspace)

    def test_empty_file_has_no_workspace(self, tmp_path):
        empty = tmp_path / "empty.fcat"
        empty.write_text("# nothing here\n", encoding="utf-8")

        with pytest.raises(InputFileError):
            load_workspace(empty)


@pytest.mark.unit
@pytest.mark.toolkit
class TestWriting:
    def test_lax_object_text(self, x2):
        text = dump_lax_object(point(x2, "1"))

        assert text.startswith("category W {\n")
        assert "functor a : W -> X2 {" in text
        assert "pt = 1;" in text

    def test_lax_morphism_survives_a_file(self, corpus_dir, workspace, tmp_path):
        m = load_lax_morphism(corpus_dir / "lower.fcat", workspace)
        path = tmp_path / "copy.fcat"
        write_text(dump_lax_morphism(m), path)

        again = load_lax_morphism(path, workspace)
        assert again.component("pt") == m.component("pt")
        assert again.functor.omap == m.functor.omap
        assert again.dom.structure.omap == m.dom.structure.omap

    def test_write_text_returns_the_text(self):
        assert write_text("abc") == "abc"
