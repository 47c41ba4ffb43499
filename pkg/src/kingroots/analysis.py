"""Convergence measurement: COC, the R-order exponent system, efficiency index,
and reference-root refinement."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BasinEscapeError,
    ConvergenceError,
    DomainError,
    InsufficientDataError,
    NonDecreasingTailError,
    ResidualTooLargeError,
)
from .mpreal import HighPrecisionReal, PrecisionContext, make_context

__all__ = [
    "ErrorSequence",
    "ROrderSolution",
    "coc_or_none",
    "efficiency_index",
    "estimate_coc",
    "precision_floor",
    "r_order_residuals",
    "refine_reference_root",
    "solve_r_order_system",
]

# errors within this many digits of the working precision are rounding noise
FLOOR_MARGIN_DIGITS = 50


def precision_floor(ctx: PrecisionContext) -> HighPrecisionReal:
    return ctx.power_of_ten(-(ctx.working_digits - FLOOR_MARGIN_DIGITS))


@dataclass(frozen=True)
class ErrorSequence:
    """``|x_n - alpha|`` for n = 0..N."""

    errors: tuple[HighPrecisionReal, ...]
    source: str = ""

    def __init__(self, errors: Sequence[HighPrecisionReal], source: str = ""):
        errors = tuple(errors)
        if any(e < 0 for e in errors):
            raise ValueError("errors must be non-negative")
        object.__setattr__(self, "errors", errors)
        object.__setattr__(self, "source", source)

    def trimmed(self) -> tuple[HighPrecisionReal, ...]:
        """Drop trailing entries that are zero or below the precision floor."""
        errs = list(self.errors)
        if not errs:
            return ()
        floor = precision_floor(errs[0].context)
        while errs and (errs[-1].is_zero() or errs[-1] < floor):
            errs.pop()
        return tuple(errs)


def estimate_coc(errors: ErrorSequence | Sequence[HighPrecisionReal]) -> HighPrecisionReal:
    """``ln(e[n+1]/e[n]) / ln(e[n]/e[n-1])`` over the last three usable errors."""
    if not isinstance(errors, ErrorSequence):
        errors = ErrorSequence(errors)
    tail = errors.trimmed()
    if len(tail) < 3:
        raise InsufficientDataError(
            f"need 3 errors above the precision floor, have {len(tail)} of {len(errors.errors)}"
        )
    e0, e1, e2 = tail[-3:]
    if not (e0 > e1 > e2):
        raise NonDecreasingTailError("last three errors are not strictly decreasing")
    return (e2 / e1).ln() / (e1 / e0).ln()


def coc_or_none(errors: Sequence[HighPrecisionReal]) -> HighPrecisionReal | None:
    try:
        return estimate_coc(errors)
    except (InsufficientDataError, NonDecreasingTailError):
        return None


def r_order_residuals(r, s, p, q):
    """Residuals of the four exponent-matching equations in (r, s, p, q)."""
    return (
        r * r - 8 * r - 4 * s - 4 * p - 4 * q - 4,
        r * s - 4 * r - 2 * s - 2 * p - 2 * q - 2,
        r * p - 2 * r - s - p - q - 1,
        r * q - r - s - p - q - 1,
    )


@dataclass(frozen=True)
class ROrderSolution:
    """R-orders of the x, z, y and w sequences."""

    r: HighPrecisionReal
    s: HighPrecisionReal
    p: HighPrecisionReal
    q: HighPrecisionReal
    iterations: int

    @property
    def residuals(self):
        return r_order_residuals(self.r, self.s, self.p, self.q)


def solve_r_order_system(initial=(8, 4, 2, 2), digits: int = 60, max_iter: int = 100) -> ROrderSolution:
    """Newton's method on the exponent system from ``initial``.

    Returns the non-trivial solution (r > 1); raises ConvergenceError otherwise.
    """
    ctx = make_context(digits, 20)
    mp = ctx.backend
    v = mp.matrix([mp.mpf(c) for c in initial])
    tol = mp.mpf(10) ** -(digits - 5)
    for it in range(1, max_iter + 1):
        r, s, p, q = v
        res = mp.matrix(list(r_order_residuals(r, s, p, q)))
        jac = mp.matrix([
            [2 * r - 8, -4, -4, -4],
            [s - 4, r - 2, -2, -2],
            [p - 2, -1, r - 1, -1],
            [q - 1, -1, -1, r - 1],
        ])
        try:
            delta = mp.lu_solve(jac, res)
        except ZeroDivisionError as exc:
            raise ConvergenceError("singular Jacobian in the R-order system") from exc
        v = v - delta
        if mp.norm(delta) < tol:
            break
    else:
        raise ConvergenceError(f"R-order system did not converge in {max_iter} iterations")
    r, s, p, q = (ctx._wrap(c) for c in v)
    if not r > 1:
        raise ConvergenceError(f"Newton converged to the trivial branch r={r!r}")
    return ROrderSolution(r, s, p, q, it)


def efficiency_index(order, evals: int, context: PrecisionContext | None = None) -> HighPrecisionReal:
    """``order ** (1/evals)``."""
    if isinstance(order, HighPrecisionReal):
        ctx = order.context
    else:
        ctx = context or make_context(50, 20)
        order = ctx.convert(order)
    if not order > 0:
        raise ValueError("order must be positive")
    if not isinstance(evals, int) or evals < 1:
        raise ValueError("evals must be a positive integer")
    return order ** (ctx.one() / evals)


def refine_reference_root(problem, hint: HighPrecisionReal, max_iter: int = 200) -> HighPrecisionReal:
    """Polish ``hint`` to a root of ``problem.f`` at full working precision.

    Newton's method with a central-difference derivative. Raises
    BasinEscapeError if the iterates wander off, ResidualTooLargeError if the
    final residual exceeds 10**(-decimal_digits + 20).
    """
    ctx = hint.context
    f = problem.f
    h = ctx.power_of_ten(-(ctx.working_digits // 2))
    radius = 10 * (abs(hint) if abs(hint) > 1 else ctx.one())
    step_tol = ctx.power_of_ten(-(ctx.working_digits - 10))
    x = hint
    prev_dx = None
    try:
        for _ in range(max_iter):
            fx = f(x)
            if fx.is_zero():
                break
            slope = (f(x + h) - f(x - h)) / (2 * h)
            if slope.is_zero():
                raise BasinEscapeError(f"zero derivative estimate at {x!r}")
            dx = fx / slope
            x = x - dx
            if abs(x - hint) > radius:
                raise BasinEscapeError(f"Newton left the basin around {hint!r}")
            scale = abs(x) if abs(x) > 1 else ctx.one()
            if abs(dx) <= step_tol * scale:
                break
            # rounding-noise plateau: steps stopped shrinking
            if prev_dx is not None and abs(dx) >= abs(prev_dx) and abs(dx) < h * scale:
                break
            prev_dx = dx
        else:
            raise ConvergenceError(f"reference root not found in {max_iter} Newton steps")
        residual = abs(f(x))
    except (DomainError, ArithmeticError) as exc:
        raise BasinEscapeError(f"function undefined along the Newton path: {exc}") from exc
    if not residual < ctx.power_of_ten(-ctx.decimal_digits + 20):
        raise ResidualTooLargeError(f"|f(alpha)| = {residual!r} after refinement")
    return x
