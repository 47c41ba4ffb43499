"""Test problems: the three built-in functions and user expressions."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from ..analysis import refine_reference_root
from ..mpreal import HighPrecisionReal, PrecisionContext, make_context
from .expr import compile_expression

__all__ = ["BUILTIN_IDS", "ProblemSpec", "builtin_corpus", "builtin_problem", "expression_problem"]


@dataclass(frozen=True)
class ProblemSpec:
    id: str
    f: Callable[[HighPrecisionReal], HighPrecisionReal]
    x0: HighPrecisionReal
    root_hint: HighPrecisionReal
    reference_root: HighPrecisionReal | None = None
    expression: str | None = None

    @property
    def context(self) -> PrecisionContext:
        return self.x0.context

    def with_reference(self) -> ProblemSpec:
        """Copy with ``reference_root`` refined from ``root_hint``."""
        return replace(self, reference_root=refine_reference_root(self, self.root_hint))

    def with_x0(self, x0: HighPrecisionReal) -> ProblemSpec:
        return replace(self, x0=x0)


def _f1(x):
    return (x * x - 2 * x + 2).ln() + (x * x - 5 * x + 4).exp() * (x - 1).sin()


def _make_f2(ctx):
    pi = ctx.pi()

    def f2(x):
        return (x * x + x * x.cos() - 1).exp() * (pi * x).sin() + x * (x * x.sin() + 1).ln()

    return f2


def _make_f3(ctx):
    pi = ctx.pi()
    const = (1 + pi) / (1 + (pi ** 3).sqrt())

    def f3(x):
        x2 = x * x
        return (1 - x2.sin()) * (1 + x2) / (1 + x2 * x) + x * (x2 - pi + 1).ln() - const

    return f3


BUILTIN_IDS = ("f1", "f2", "f3")

# analytic root, starting point, and a plain-text form of each function
_BUILTINS = {
    "f1": (lambda ctx: ctx.one(), "1.35",
           "ln(x^2-2*x+2) + exp(x^2-5*x+4)*sin(x-1)"),
    "f2": (lambda ctx: ctx.zero(), "0.6",
           "exp(x^2+x*cos(x)-1)*sin(pi*x) + x*ln(x*sin(x)+1)"),
    "f3": (lambda ctx: ctx.pi().sqrt(), "1.7",
           "(1-sin(x^2))*(1+x^2)/(1+x^3) + x*ln(x^2-pi+1) - (1+pi)/(1+sqrt(pi^3))"),
}


def builtin_problem(problem_id: str, ctx: PrecisionContext | None = None, refine: bool = True) -> ProblemSpec:
    ctx = ctx or make_context()
    root, x0, text = _BUILTINS[problem_id]
    f = {"f1": lambda c: _f1, "f2": _make_f2, "f3": _make_f3}[problem_id](ctx)
    problem = ProblemSpec(problem_id, f, ctx.parse(x0), root(ctx), expression=text)
    return problem.with_reference() if refine else problem


def builtin_corpus(ctx: PrecisionContext | None = None) -> list[ProblemSpec]:
    """f1, f2, f3 with their standard starting points and refined reference roots."""
    ctx = ctx or make_context()
    return [builtin_problem(pid, ctx) for pid in BUILTIN_IDS]


def expression_problem(
    text: str,
    x0: HighPrecisionReal,
    root_hint: HighPrecisionReal | None = None,
    problem_id: str | None = None,
) -> ProblemSpec:
    """A user problem from an expression in ``x``; the reference root is refined
    from ``root_hint`` (default ``x0``)."""
    ctx = x0.context
    f = compile_expression(text, ctx)
    problem = ProblemSpec(problem_id or f"expr:{text}", f, x0, root_hint if root_hint is not None else x0, expression=text)
    return problem.with_reference()
