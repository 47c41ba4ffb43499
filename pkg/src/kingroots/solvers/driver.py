"""Iteration driver: runs a kernel, updates beta with memory, decides when to stop."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field, replace
from enum import Enum

from ..analysis import coc_or_none
from ..errors import CoincidentNodesError, ConfigError, KingRootsError
from ..mpreal import HighPrecisionReal, PrecisionContext
from .kernels import IterationRecord, MethodSpec, step, update_beta

__all__ = ["RunConfig", "RunReport", "Termination", "default_stop_tol", "run_method"]

log = logging.getLogger(__name__)


class Termination(str, Enum):
    TOLERANCE = "tolerance"
    STEP_COLLAPSE = "step-collapse"
    MAX_ITERS = "max-iters"
    KERNEL_FAILURE = "kernel-failure"


@dataclass(frozen=True)
class RunConfig:
    """Echo of every input that shaped a run."""

    kernel: str
    weight: str | None
    gamma: HighPrecisionReal
    beta0: HighPrecisionReal
    memory: bool
    x0: HighPrecisionReal
    max_iters: int
    stop_tol: HighPrecisionReal
    decimal_digits: int
    guard_digits: int


@dataclass
class RunReport:
    problem: str
    method: str
    config: RunConfig
    trace: list[IterationRecord]
    # |x_k - alpha| for k = 0 .. len(trace); empty without a reference root
    errors: list[HighPrecisionReal]
    coc: HighPrecisionReal | None
    termination: Termination
    root: HighPrecisionReal
    failure: str | None = None
    failure_step: int | None = None
    wall_time: float = field(default=0.0, compare=False)

    @property
    def failed(self) -> bool:
        return self.termination is Termination.KERNEL_FAILURE


def default_stop_tol(ctx: PrecisionContext) -> HighPrecisionReal:
    d = ctx.decimal_digits
    return ctx.power_of_ten(-max(d - 150, d // 2))


_RECOVERABLE = (KingRootsError, ArithmeticError)


def run_method(problem, spec: MethodSpec, max_iters: int = 3, stop_tol: HighPrecisionReal | None = None) -> RunReport:
    """Iterate ``spec``'s kernel on ``problem`` from ``problem.x0``.

    ``problem`` needs ``id``, ``f``, ``x0`` and ``reference_root`` (may be None).
    With memory on, beta0 is used for step 0 and ``update_beta`` supplies
    beta from step 1 onward. Kernel failures end the run with a
    ``kernel-failure`` report rather than an exception; coincident
    interpolation nodes count as convergence.
    """
    if max_iters < 1:
        raise ConfigError("max_iters must be >= 1")
    ctx = spec.context
    if problem.x0.context != ctx:
        raise ConfigError("problem and method were built in different precision contexts")
    if stop_tol is None:
        stop_tol = default_stop_tol(ctx)
    alpha = problem.reference_root
    f = problem.f

    config = RunConfig(
        kernel=spec.kernel,
        weight=spec.weight.id if spec.weight is not None else None,
        gamma=spec.gamma,
        beta0=spec.beta0,
        memory=spec.memory,
        x0=problem.x0,
        max_iters=max_iters,
        stop_tol=stop_tol,
        decimal_digits=ctx.decimal_digits,
        guard_digits=ctx.guard_digits,
    )
    trace: list[IterationRecord] = []
    errors = [abs(problem.x0 - alpha)] if alpha is not None else []
    termination = Termination.MAX_ITERS
    failure = failure_step = None
    x = problem.x0
    beta = spec.beta0

    def record(rec):
        if alpha is not None:
            rec = replace(rec, abs_error=abs(rec.x_next - alpha))
            errors.append(rec.abs_error)
        trace.append(rec)
        return rec

    start = time.perf_counter()
    for n in range(max_iters):
        try:
            fx = f(x)
            if abs(fx) < stop_tol:
                termination = Termination.TOLERANCE
                break
            if spec.memory and trace:
                beta = update_beta(trace[-1], x, f, fx)
                if spec.is_competitor:
                    beta = -beta
            rec = record(step(x, spec, f, beta=beta, fx=fx, n=n))
        except CoincidentNodesError as exc:
            log.debug("step %d: %s; treating as converged", n, exc)
            if exc.record is not None:
                x = record(replace(exc.record, n=n)).x_next
            termination = Termination.STEP_COLLAPSE
            break
        except _RECOVERABLE as exc:
            termination = Termination.KERNEL_FAILURE
            failure = f"{type(exc).__name__}: {exc}"
            failure_step = n
            break
        previous, x = x, rec.x_next
        if abs(x - previous) < stop_tol:
            termination = Termination.TOLERANCE
            break
    wall_time = time.perf_counter() - start

    return RunReport(
        problem=problem.id,
        method=spec.label,
        config=config,
        trace=trace,
        errors=errors,
        coc=coc_or_none(errors),
        termination=termination,
        root=x,
        failure=failure,
        failure_step=failure_step,
        wall_time=wall_time,
    )
