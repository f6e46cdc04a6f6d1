"""
Tests for the logger factory.
"""

import logging
import sys

import pytest

from laxcat.core.utils.logger import advanced_logger, get_logger, set_level


@pytest.mark.unit
@pytest.mark.core
class TestLogger:
    def test_stream_logger_writes_to_stderr(self):
        logger = get_logger("laxcat.test_stream")

        (handler,) = logger.handlers
        assert isinstance(handler, logging.StreamHandler)
        assert handler.stream is sys.stderr
        assert logger.level == logging.WARNING
        assert not logger.propagate

    def test_repeated_calls_keep_one_handler(self):
        get_logger("laxcat.test_repeat")

        assert len(get_logger("laxcat.test_repeat").handlers) == 1

    def test_rotating_file(self, tmp_path):
        path = tmp_path / "run.log"
        logger = advanced_logger("laxcat.test_file", level="info", handler_type="rotating", filename=path)

        logger.info("window built")
        logger.handlers[0].flush()
        assert "window built" in path.read_text(encoding="utf-8")
        logger.handlers[0].close()

    def test_unknown_handler(self):
        with pytest.raises(ValueError):
            advanced_logger("laxcat.test_bad", handler_type="syslog")

    def test_set_level_reaches_laxcat_loggers_only(self):
        ours = get_logger("laxcat.test_levels")
        other = logging.getLogger("elsewhere")
        other.setLevel(logging.WARNING)

        set_level("debug")
        assert ours.level == logging.DEBUG
        assert other.level == logging.WARNING
