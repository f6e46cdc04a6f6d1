"""
Pytest configuration and shared fixtures for the laxcat test suite.

CORE FIXTURES:
==============

Categories (from tests.fixtures.categories):
  - one, empty, two: 𝟙, ∅, 𝟚
  - x2, x3, v, diamond, vee, retract: workspace categories

Files:
  - corpus_dir: the bundled `.fcat` corpus under assets/corpus
  - golden_dir: expected canonical outputs under tests/golden

Configuration:
  - reset_laxcat_config: fresh LaxcatConfig for every test (autouse)
  - quiet_logging: laxcat loggers raised to CRITICAL (autouse)

USAGE EXAMPLES:
===============

    def test_meet(x3):
        assert meet(x3, ["m", "1"]) == "m"

    def test_roundtrip(corpus_dir):
        text = (corpus_dir / "X2.fcat").read_text()
"""

from pathlib import Path

import pytest

from laxcat.core.settings import reset_config
from laxcat.core.utils.logger import set_level

pytest_plugins = ["fixtures.categories"]

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(autouse=True)
def reset_laxcat_config(monkeypatch):
    """Every test starts from defaults, whatever LAXCAT_* says outside."""
    for name in (
        "LAXCAT_BOUND",
        "LAXCAT_ENUMERATION_LIMIT",
        "LAXCAT_MAX_OBJECTS",
        "LAXCAT_MAX_MORPHISMS",
        "LAXCAT_PROBES",
        "LAXCAT_WORKERS",
        "LAXCAT_LOG_LEVEL",
        "LAXCAT_DEBUG_MODE",
    ):
        monkeypatch.delenv(name, raising=False)
    reset_config()
    yield
    reset_config()


@pytest.fixture(autouse=True)
def quiet_logging():
    """Disable logging during tests to reduce noise."""
    set_level("CRITICAL")
    yield


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return ROOT / "assets" / "corpus"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return Path(__file__).resolve().parent / "golden"
