"""Central logging configuration using structlog for JSON output."""

import logging
import sys
from typing import Optional

import structlog

from monideal.config import settings

_CONFIGURED = False


def setup_logging(level: Optional[int] = None) -> None:
    """Configure structlog and the standard logging framework.

    Log records go to standard error; standard output is reserved for
    computation results.

    Args:
        level: Root logging level. Defaults to ``settings.LOG_LEVEL``.
    """
    global _CONFIGURED

    if level is None:
        level = logging.getLevelName(settings.LOG_LEVEL.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    if _CONFIGURED:
        logging.getLogger().setLevel(level)
        return

    timestamper = structlog.processors.TimeStamper(fmt="iso")

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            timestamper,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    renderer = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if settings.LOG_JSON
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    formatter = structlog.stdlib.ProcessorFormatter(
        processor=renderer,
        foreign_pre_chain=[
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            timestamper,
        ],
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.handlers = []
    root_logger.addHandler(handler)
    root_logger.setLevel(level)

    _CONFIGURED = True


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """A structlog logger bound to the stdlib logger ``name``.

    Events pass through the standard logging tree, so until
    ``setup_logging`` runs they are subject to stdlib defaults (the package
    logger carries a ``NullHandler``) and never reach standard output.
    """
    return structlog.wrap_logger(logging.getLogger(name), wrapper_class=structlog.stdlib.BoundLogger)
