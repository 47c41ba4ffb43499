"""Iteration kernels, weight functions and the run driver."""

from .driver import RunConfig, RunReport, Termination, default_stop_tol, run_method
from .kernels import (
    COMPETITOR_KERNELS,
    KERNELS,
    IterationRecord,
    MethodSpec,
    kung_traub_step,
    sharma_step,
    step,
    three_point_step,
    two_point_step,
    update_beta,
    zheng_step,
)
from .weights import WEIGHTS, WeightCheck, WeightFunction, get_weight, validate_weight

__all__ = [
    "COMPETITOR_KERNELS",
    "KERNELS",
    "WEIGHTS",
    "IterationRecord",
    "MethodSpec",
    "RunConfig",
    "RunReport",
    "Termination",
    "WeightCheck",
    "WeightFunction",
    "default_stop_tol",
    "get_weight",
    "kung_traub_step",
    "run_method",
    "sharma_step",
    "step",
    "three_point_step",
    "two_point_step",
    "update_beta",
    "validate_weight",
    "zheng_step",
]
