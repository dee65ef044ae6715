"""Logging for CayleyColor: one package logger, stderr for warnings, optional file trail.

Stdout carries JSON output, so console records go to stderr only.
"""

import logging
import sys
import time
from collections.abc import Generator
from contextlib import contextmanager
from pathlib import Path
from typing import Literal

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

_ROOT = "cayleycolor"
_CONSOLE_FORMAT = "%(levelname)s: %(message)s"
_FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _handler(handler: logging.Handler, level: LogLevel | int, fmt: str) -> logging.Handler:
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(fmt))
    return handler


def setup_logging(
    level: LogLevel = "INFO",
    log_file: Path | None = None,
    console_level: LogLevel = "WARNING",
) -> logging.Logger:
    """Configure the ``cayleycolor`` logger, replacing handlers from an earlier call.

    Args:
        level: Package logging level
        log_file: Optional file that receives every record at DEBUG and above
        console_level: Level for stderr output

    Returns:
        The package logger
    """
    logger = logging.getLogger(_ROOT)
    logger.setLevel(level)
    logger.handlers.clear()
    logger.addHandler(_handler(logging.StreamHandler(sys.stderr), console_level, _CONSOLE_FORMAT))
    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        logger.addHandler(_handler(logging.FileHandler(log_file), logging.DEBUG, _FILE_FORMAT))
    return logger


def get_logger(name: str) -> logging.Logger:
    """Logger under the package namespace; ``name`` is prefixed when it lacks it."""
    if name == _ROOT or name.startswith(f"{_ROOT}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{_ROOT}.{name}")


@contextmanager
def log_elapsed(
    logger: logging.Logger, stage: str, level: int = logging.DEBUG
) -> Generator[None]:
    """Log ``stage`` on entry and again with its wall time on exit (also on failure)."""
    logger.log(level, "%s: started", stage)
    start = time.perf_counter()
    try:
        yield
    except Exception:
        logger.log(level, "%s: aborted after %.3fs", stage, time.perf_counter() - start)
        raise
    logger.log(level, "%s: done in %.3fs", stage, time.perf_counter() - start)
