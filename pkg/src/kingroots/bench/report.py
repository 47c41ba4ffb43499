"""Report emission (table / json / csv) and JSON parsing back into RunReports."""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Iterable

from mpmath.libmp import to_str

from ..errors import ReportError
from ..mpreal import HighPrecisionReal, format_decimal, make_context, parse_decimal
from ..solvers.driver import RunConfig, RunReport, Termination
from ..solvers.kernels import IterationRecord

__all__ = [
    "FORMATS",
    "emit_report",
    "format_coc",
    "format_error",
    "render",
    "reports_from_json",
    "reports_to_json",
]

FORMATS = ("table", "json", "csv")

_RECORD_FIELDS = ("x", "w", "y", "z", "fx", "fw", "fy", "fz", "beta", "x_next", "abs_error")


def format_error(e: HighPrecisionReal | None, digits: int = 3) -> str:
    """``0.314e-6`` style: mantissa in [0.1, 1), ``digits`` significant digits, rounded."""
    if e is None:
        return "-"
    if e.is_zero():
        return "0"
    s = to_str(e.value._mpf_, digits, min_fixed=0, max_fixed=0, show_zero_exponent=True)
    mantissa, exponent = s.split("e")
    sign = "-" if mantissa.startswith("-") else ""
    body = mantissa.lstrip("-").replace(".", "")
    body = (body + "0" * digits)[:digits]
    return f"{sign}0.{body}e{int(exponent) + 1}"


def format_coc(coc: HighPrecisionReal | None, decimals: int = 4) -> str:
    """COC truncated (not rounded) to ``decimals`` places."""
    if coc is None:
        return "-"
    scaled = int(coc.value * 10 ** decimals)  # int() truncates toward zero
    sign = "-" if scaled < 0 or (scaled == 0 and coc < 0) else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // 10 ** decimals}.{scaled % 10 ** decimals:0{decimals}d}"


def _short(v: HighPrecisionReal | None) -> str:
    if v is None:
        return ""
    return to_str(v.value._mpf_, 20)


def _dec(v):
    return None if v is None else format_decimal(v)


def _report_to_dict(r: RunReport) -> dict:
    c = r.config
    return {
        "problem": r.problem,
        "method": r.method,
        "config": {
            "kernel": c.kernel,
            "weight": c.weight,
            "gamma": _dec(c.gamma),
            "beta0": _dec(c.beta0),
            "memory": c.memory,
            "x0": _dec(c.x0),
            "max_iters": c.max_iters,
            "stop_tol": _dec(c.stop_tol),
            "decimal_digits": c.decimal_digits,
            "guard_digits": c.guard_digits,
        },
        "trace": [
            {"n": rec.n, **{name: _dec(getattr(rec, name)) for name in _RECORD_FIELDS}}
            for rec in r.trace
        ],
        "errors": [_dec(e) for e in r.errors],
        "coc": _dec(r.coc),
        "termination": r.termination.value,
        "root": _dec(r.root),
        "failure": r.failure,
        "failure_step": r.failure_step,
        "wall_time": r.wall_time,
    }


def _report_from_dict(d: dict) -> RunReport:
    cfg = d["config"]
    ctx = make_context(cfg["decimal_digits"], cfg["guard_digits"])

    def num(s):
        return None if s is None else parse_decimal(s, ctx)

    config = RunConfig(
        kernel=cfg["kernel"],
        weight=cfg["weight"],
        gamma=num(cfg["gamma"]),
        beta0=num(cfg["beta0"]),
        memory=cfg["memory"],
        x0=num(cfg["x0"]),
        max_iters=cfg["max_iters"],
        stop_tol=num(cfg["stop_tol"]),
        decimal_digits=cfg["decimal_digits"],
        guard_digits=cfg["guard_digits"],
    )
    trace = [
        IterationRecord(n=step["n"], **{name: num(step[name]) for name in _RECORD_FIELDS})
        for step in d["trace"]
    ]
    return RunReport(
        problem=d["problem"],
        method=d["method"],
        config=config,
        trace=trace,
        errors=[num(e) for e in d["errors"]],
        coc=num(d["coc"]),
        termination=Termination(d["termination"]),
        root=num(d["root"]),
        failure=d["failure"],
        failure_step=d["failure_step"],
        wall_time=d["wall_time"],
    )


def reports_to_json(reports: Iterable[RunReport]) -> str:
    return json.dumps([_report_to_dict(r) for r in reports], indent=2) + "\n"


def reports_from_json(text: str) -> list[RunReport]:
    return [_report_from_dict(d) for d in json.loads(text)]


def _group_key(r: RunReport):
    return (_short(r.config.beta0), _short(r.config.gamma))


def _table(reports: list[RunReport]) -> str:
    out = []
    groups: dict = {}
    for r in reports:
        groups.setdefault(_group_key(r), []).append(r)
    for (beta0, gamma), group in groups.items():
        methods = list(dict.fromkeys(r.method for r in group))
        problems = list(dict.fromkeys(r.problem for r in group))
        cells = {(r.problem, r.method): r for r in group}
        width = max(14, *(len(m) + 2 for m in methods))
        label_w = 14
        out.append(f"beta0 = {beta0}, gamma = {gamma}")
        out.append(" " * label_w + "".join(m.rjust(width) for m in methods))
        for pid in problems:
            row_reports = [cells.get((pid, m)) for m in methods]
            x0 = next(r for r in row_reports if r is not None).config.x0
            out.append(f"{pid}, x0={to_str(x0.value._mpf_, 15)}")
            n_rows = max(len(r.errors) - 1 for r in row_reports if r is not None)
            for k in range(1, n_rows + 1):
                line = f"|x{k}-alpha|".ljust(label_w)
                for r in row_reports:
                    e = r.errors[k] if r is not None and k < len(r.errors) else None
                    line += format_error(e).rjust(width)
                out.append(line)
            line = "coc".ljust(label_w)
            for r in row_reports:
                line += (format_coc(r.coc) if r is not None else "-").rjust(width)
            out.append(line)
            failed = [r for r in row_reports if r is not None and r.failed]
            for r in failed:
                out.append(f"  ! {r.method} failed at step {r.failure_step}: {r.failure}")
        out.append("")
    return "\n".join(out)


def _csv(reports: list[RunReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["problem", "method", "beta0", "gamma", "memory", "n", "x", "beta", "abs_error", "termination"])
    for r in reports:
        for rec in r.trace:
            writer.writerow([
                r.problem,
                r.method,
                format_decimal(r.config.beta0),
                format_decimal(r.config.gamma),
                str(r.config.memory).lower(),
                rec.n,
                _short(rec.x),
                _short(rec.beta),
                _short(rec.abs_error),
                r.termination.value,
            ])
    return buf.getvalue()


def render(reports: list[RunReport], fmt: str = "table") -> str:
    if fmt == "table":
        return _table(reports)
    if fmt == "json":
        return reports_to_json(reports)
    if fmt == "csv":
        return _csv(reports)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def emit_report(reports: list[RunReport], fmt: str = "table", destination: str | None = None) -> None:
    """Write ``reports`` to ``destination`` (a path) or stdout when None or ``-``."""
    text = render(reports, fmt)
    if destination is None or destination == "-":
        sys.stdout.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ReportError(f"cannot write report to {destination}: {exc}") from exc
