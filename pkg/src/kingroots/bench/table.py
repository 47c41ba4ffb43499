"""Named methods and the (method x problem) benchmark grid."""

from __future__ import annotations

from ..errors import ConfigError
from ..mpreal import PrecisionContext
from ..solvers import MethodSpec, RunReport, get_weight, run_method

__all__ = ["METHOD_IDS", "PROPOSED_IDS", "COMPETITOR_IDS", "method_spec", "run_table"]

PROPOSED_IDS = ("m1", "m2", "m3", "m4")
COMPETITOR_IDS = ("kt", "sharma", "zheng")
METHOD_IDS = PROPOSED_IDS + COMPETITOR_IDS + ("two-point",)

_COMPETITOR_KERNELS = {"kt": "kung_traub", "sharma": "sharma", "zheng": "zheng"}


def method_spec(method_id: str, ctx: PrecisionContext, gamma="0", beta0="0.01", memory: bool = True) -> MethodSpec:
    """Build the MethodSpec behind a CLI method name.

    ``gamma`` and ``beta0`` may be decimal strings, ints or values in ``ctx``.
    ``two-point`` is always run with fixed beta.
    """
    gamma = ctx.convert(gamma)
    beta0 = ctx.convert(beta0)
    if method_id in PROPOSED_IDS:
        weight = get_weight("G" + method_id[1])
        return MethodSpec("three_point", gamma, beta0, weight=weight, memory=memory)
    if method_id in _COMPETITOR_KERNELS:
        return MethodSpec(_COMPETITOR_KERNELS[method_id], gamma, beta0, memory=memory)
    if method_id == "two-point":
        return MethodSpec("two_point", gamma, beta0, weight=get_weight("G1"), memory=False)
    raise ConfigError(f"unknown method {method_id!r}; choose from {METHOD_IDS}")


def run_table(methods: list[MethodSpec], problems: list, iters: int = 3) -> list[RunReport]:
    """One report per (method, problem) pair, problems varying fastest.

    Failed runs come back as kernel-failure reports; the grid always completes.
    """
    return [run_method(problem, spec, max_iters=iters) for spec in methods for problem in problems]
