"""
Performance monitoring utilities.
"""

import time
from typing import Any

from riskpref.core.logging_config import get_logger
from riskpref.core.metrics import operation_duration_seconds

logger = get_logger(__name__)


class PerformanceMonitor:
    """
    Monitor the duration of an operation.

    Logs completion or failure and observes the duration histogram.

    Usage:
        with PerformanceMonitor("audit", suite="rdu-choquet"):
            ...
    """

    def __init__(self, operation_name: str, **tags: Any):
        self.operation_name = operation_name
        self.tags = tags
        self.start_time: float | None = None
        self.end_time: float | None = None

    def __enter__(self) -> "PerformanceMonitor":
        """Start monitoring."""
        self.start_time = time.perf_counter()
        logger.debug("operation_started", operation=self.operation_name, **self.tags)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        """Stop monitoring and log results."""
        self.end_time = time.perf_counter()
        duration = self.end_time - self.start_time
        operation_duration_seconds.labels(operation=self.operation_name).observe(duration)

        if exc_type is None:
            logger.info(
                "operation_completed",
                operation=self.operation_name,
                duration_ms=round(duration * 1000, 2),
                **self.tags,
            )
        else:
            logger.error(
                "operation_failed",
                operation=self.operation_name,
                duration_ms=round(duration * 1000, 2),
                error=str(exc_val),
                **self.tags,
            )
