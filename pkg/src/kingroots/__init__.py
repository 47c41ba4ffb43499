"""Derivative-free King-family root finders with and without memory, at arbitrary precision."""

from .analysis import efficiency_index, estimate_coc, refine_reference_root, solve_r_order_system
from .mpreal import HighPrecisionReal, PrecisionContext, elementary, make_context
from .solvers import MethodSpec, run_method

__version__ = "0.1.0"

__all__ = [
    "HighPrecisionReal",
    "MethodSpec",
    "PrecisionContext",
    "efficiency_index",
    "elementary",
    "estimate_coc",
    "make_context",
    "refine_reference_root",
    "run_method",
    "solve_r_order_system",
]
