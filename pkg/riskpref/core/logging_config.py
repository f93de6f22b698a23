"""
Structured logging configuration.

Provides:
- JSON formatted logs for batch runs and log aggregation
- Human-readable logs for interactive use
- Run context (command, suite, seed) on every entry

Logs are written to standard error; standard output carries reports only.
"""

import logging
import sys
from typing import Any

import structlog
from structlog.types import EventDict, Processor

from riskpref.config import settings


def add_app_context(logger: Any, method_name: str, event_dict: EventDict) -> EventDict:
    """Add service name and version to log entries."""
    event_dict["service"] = settings.app_name
    event_dict["version"] = settings.app_version
    return event_dict


def add_run_context(logger: Any, method_name: str, event_dict: EventDict) -> EventDict:
    """
    Add run context from contextvars.

    The CLI sets these before dispatching a command.
    """
    from riskpref.core.context import get_run_context

    event_dict.update(get_run_context())
    return event_dict


def setup_logging(log_level: str | None = None, log_format: str | None = None) -> None:
    """
    Configure structured logging.

    Arguments override the settings, so the CLI flags win over the environment.
    """
    level_name = (log_level or settings.log_level).upper()
    level = getattr(logging, level_name)
    fmt = log_format or settings.log_format

    shared_processors: list[Processor] = [
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.contextvars.merge_contextvars,
        add_app_context,
        add_run_context,
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
    ]

    if fmt == "json":
        processors = shared_processors + [structlog.processors.JSONRenderer()]
    else:
        processors = shared_processors + [structlog.dev.ConsoleRenderer(colors=False)]

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=level,
        force=True,
    )

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    logger = structlog.get_logger(__name__)
    logger.debug("logging_configured", log_level=level_name, log_format=fmt)


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """
    Get a structured logger instance.

    Usage:
        logger = get_logger(__name__)
        logger.info("lp_solved", iterations=12, feasible=True)
    """
    return structlog.get_logger(name)
