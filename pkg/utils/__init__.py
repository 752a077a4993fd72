"""Utility modules."""

from utils.logger import get_logger, log_with_context, set_level
from utils.text_utils import parse_int_list, parse_named_ints, parse_slope, parse_suites
from utils.timing import timing_decorator

__all__ = [
    "get_logger",
    "log_with_context",
    "set_level",
    "parse_int_list",
    "parse_named_ints",
    "parse_slope",
    "parse_suites",
    "timing_decorator",
]
