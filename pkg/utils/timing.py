"""Timing of verification suites."""

import logging
import time
from functools import wraps
from typing import Any, Callable

from utils.logger import log_with_context


def timing_decorator(logger: logging.Logger) -> Callable:
    """Decorator to measure and log function execution time.

    Args:
        logger: Logger instance to use for logging

    Returns:
        Decorator function

    Example:
        @timing_decorator(logger)
        def verify_hnsa(ctx, order):
            ...
    """

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                duration = time.perf_counter() - start_time
                log_with_context(
                    logger,
                    "error",
                    f"{func.__name__} failed",
                    seconds=f"{duration:.3f}",
                    error=type(e).__name__,
                )
                raise
            duration = time.perf_counter() - start_time
            log_with_context(
                logger,
                "info",
                f"{func.__name__} completed",
                seconds=f"{duration:.3f}",
            )
            return result

        return wrapper

    return decorator
