"""
Logger factory for laxcat modules.

Every module calls ``get_logger(__name__)``. Records go to stderr by
default so that canonical output on stdout is never interleaved with
diagnostics; file and rotating-file handlers are available for long
batch runs.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, Union

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
HANDLER_TYPES = ("stream", "file", "rotating")


def _handler(
    handler_type: str, filename: Path, max_bytes: int, backup_count: int
) -> logging.Handler:
    if handler_type == "file":
        return logging.FileHandler(filename, encoding="utf-8")
    if handler_type == "rotating":
        return RotatingFileHandler(
            filename, maxBytes=max_bytes, backupCount=backup_count, encoding="utf-8"
        )
    return logging.StreamHandler(sys.stderr)


def advanced_logger(
    name: str,
    level: Optional[str] = None,
    handler_type: str = "stream",
    filename: Optional[Union[str, Path]] = None,
    log_format: Optional[str] = None,
    max_bytes: int = 10 * 1024 * 1024,
    backup_count: int = 5,
) -> logging.Logger:
    """
    Configure a named logger with exactly one handler.

    Args:
        name: Logger name, usually the module's ``__name__``
        level: Level name; defaults to ``LaxcatConfig.log_level``
        handler_type: ``"stream"`` (stderr), ``"file"`` or ``"rotating"``
        filename: Log file for the file handlers; ``<name>.log`` in the
            working directory when omitted
        log_format: ``logging`` format string
        max_bytes: Rotation size of the rotating handler
        backup_count: Rotated files kept by the rotating handler

    Raises:
        ValueError: for an unknown handler type
    """
    if handler_type not in HANDLER_TYPES:
        raise ValueError(f"handler_type must be one of {HANDLER_TYPES}, got {handler_type!r}")
    if level is None:
        from laxcat.core.settings import get_config

        level = get_config().log_level

    logger = logging.getLogger(name)
    logger.handlers.clear()
    handler = _handler(handler_type, Path(filename or f"{name}.log"), max_bytes, backup_count)
    handler.setFormatter(logging.Formatter(log_format or DEFAULT_FORMAT, DEFAULT_DATE_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level.upper())
    logger.propagate = False
    return logger


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """A stderr logger at the configured level."""
    return advanced_logger(name, level=level)


def set_level(level: str) -> None:
    """Apply a level to every laxcat logger created so far."""
    for name in list(logging.root.manager.loggerDict):
        if name == "laxcat" or name.startswith("laxcat."):
            logging.getLogger(name).setLevel(level.upper())
