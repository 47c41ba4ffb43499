"""Command-line benchmark runner.

Examples::

    kingroots-bench --all
    kingroots-bench --method m3 --function f2 --format json --out f2.json
    kingroots-bench --method kt --function "expr:x^3-2" --x0 1.3
    kingroots-bench --method m1 --beta0-sweep 0.001,0.01,0.1,1

Exit status: 0 on success, 1 if any run hit a kernel failure, 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from ..errors import ConvergenceError, KingRootsError
from ..mpreal import DEFAULT_DIGITS, DEFAULT_GUARD_DIGITS, make_context
from .problems import BUILTIN_IDS, builtin_problem, expression_problem
from .report import FORMATS, emit_report
from .table import COMPETITOR_IDS, METHOD_IDS, PROPOSED_IDS, method_spec, run_table

log = logging.getLogger("kingroots")

EXIT_OK, EXIT_KERNEL_FAILURE, EXIT_CONFIG = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kingroots-bench",
        description="Run derivative-free multipoint root finders at high precision and report errors and COC.",
    )
    p.add_argument("--method", action="append", choices=METHOD_IDS, help="method to run (repeatable; default m1)")
    p.add_argument("--function", action="append", metavar="f1|f2|f3|expr:STRING",
                   help="test function (repeatable; default f1)")
    p.add_argument("--x0", help="starting point as a decimal literal (overrides the built-in x0)")
    p.add_argument("--root-hint", help="starting guess for refining the reference root of an expr: function")
    p.add_argument("--beta0", default="0.01", help="initial beta (default 0.01)")
    p.add_argument("--gamma", default="0", help="King family parameter (default 0)")
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="significant decimal digits (default 1200)")
    p.add_argument("--guard-digits", type=int, default=DEFAULT_GUARD_DIGITS,
                   help=f"extra working digits (default {DEFAULT_GUARD_DIGITS})")
    p.add_argument("--iters", type=int, default=3, help="iterations per run (default 3)")
    p.add_argument("--no-memory", action="store_true", help="keep beta fixed at beta0")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--beta0-sweep", metavar="LIST", help="comma-separated beta0 values; one grid per value")
    p.add_argument("--all", action="store_true", help="full grid: m1-m4, kt, sharma, zheng on f1-f3")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _problems(args, ctx):
    functions = list(BUILTIN_IDS) if args.all else (args.function or ["f1"])
    problems = []
    for name in functions:
        if name in BUILTIN_IDS:
            problem = builtin_problem(name, ctx)
            if args.x0 is not None:
                problem = problem.with_x0(ctx.parse(args.x0))
        elif name.startswith("expr:"):
            if args.x0 is None:
                raise KingRootsError("expr: functions need --x0")
            hint = ctx.parse(args.root_hint) if args.root_hint is not None else None
            problem = expression_problem(name[len("expr:"):], ctx.parse(args.x0), hint, problem_id=name)
        else:
            raise KingRootsError(f"unknown function {name!r}; use f1, f2, f3 or expr:STRING")
        problems.append(problem)
    return problems


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.iters < 1:
        parser.error("--iters must be >= 1")

    try:
        ctx = make_context(args.digits, args.guard_digits)
        problems = _problems(args, ctx)
        method_ids = list(PROPOSED_IDS + COMPETITOR_IDS) if args.all else (args.method or ["m1"])
        betas = [b.strip() for b in args.beta0_sweep.split(",")] if args.beta0_sweep else [args.beta0]
        reports = []
        for beta0 in betas:
            specs = [
                method_spec(m, ctx, gamma=args.gamma, beta0=beta0, memory=not args.no_memory)
                for m in method_ids
            ]
            reports.extend(run_table(specs, problems, args.iters))
        emit_report(reports, args.format, args.out)
    except (KingRootsError, ConvergenceError, ValueError, TypeError) as exc:
        print(f"kingroots-bench: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    failed = [r for r in reports if r.failed]
    for r in failed:
        log.error("%s on %s failed at step %s: %s", r.method, r.problem, r.failure_step, r.failure)
    return EXIT_KERNEL_FAILURE if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
