"""Test corpus, benchmark grid, report emission and the CLI."""

from .expr import compile_expression, parse_expression
from .problems import BUILTIN_IDS, ProblemSpec, builtin_corpus, builtin_problem, expression_problem
from .report import emit_report, format_coc, format_error, render, reports_from_json, reports_to_json
from .table import COMPETITOR_IDS, METHOD_IDS, PROPOSED_IDS, method_spec, run_table

__all__ = [
    "BUILTIN_IDS",
    "COMPETITOR_IDS",
    "METHOD_IDS",
    "PROPOSED_IDS",
    "ProblemSpec",
    "builtin_corpus",
    "builtin_problem",
    "compile_expression",
    "emit_report",
    "expression_problem",
    "format_coc",
    "format_error",
    "method_spec",
    "parse_expression",
    "render",
    "reports_from_json",
    "reports_to_json",
    "run_table",
]
