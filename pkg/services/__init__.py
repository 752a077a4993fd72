"""Series computations and verification suites."""

from services.dynkin import dynkin_factorization
from services.hn_recursion import (
    HNContext,
    e_d,
    p_d_recursive,
    p_d_resolved,
    verify_hnsa,
)
from services.kronecker import dt_table, verify_kronecker
from services.poisson_service import (
    PoissonAuto,
    phi,
    t_d,
    verify_main_theorem,
    verify_poisson,
)
from services.reports import Discrepancy, Report
from services.wallcross import euler_table, smooth_model_table, verify_integrality

__all__ = [
    "dynkin_factorization",
    "HNContext",
    "e_d",
    "p_d_recursive",
    "p_d_resolved",
    "verify_hnsa",
    "dt_table",
    "verify_kronecker",
    "PoissonAuto",
    "phi",
    "t_d",
    "verify_main_theorem",
    "verify_poisson",
    "Discrepancy",
    "Report",
    "euler_table",
    "smooth_model_table",
    "verify_integrality",
]
