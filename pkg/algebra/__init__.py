"""Exact algebra: rational functions in q, q-binomials, skew and commutative series."""

from algebra.comm_series import CommSeries, bracket, substitute, unit_power
from algebra.qbinomial import qbinom
from algebra.rational_functions import QLaurent, QRational, as_laurent, evaluate
from algebra.skew_series import (
    SkewSeries,
    descending_product,
    invert,
    mul,
    restrict_slope,
    specialize_q1,
    twist,
)

__all__ = [
    "CommSeries",
    "bracket",
    "substitute",
    "unit_power",
    "qbinom",
    "QLaurent",
    "QRational",
    "as_laurent",
    "evaluate",
    "SkewSeries",
    "descending_product",
    "invert",
    "mul",
    "restrict_slope",
    "specialize_q1",
    "twist",
]
