"""Divided differences and Newton-form derivatives at the newest node.

Nodes are stored newest first, so the derivative of the Newton polynomial at
``nodes[0]`` reads straight off the top edge of the divided-difference tableau:

    N'(a) = f[a,b] + f[a,b,c](a-b) + f[a,b,c,d](a-b)(a-c) + f[a,b,c,d,e](a-b)(a-c)(a-d)

Only degrees 3 and 4 are needed by the solvers, and only 2 to 5 nodes are
accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ArityError, CoincidentNodesError, ContextMismatchError
from .mpreal import HighPrecisionReal

__all__ = [
    "NodeSet",
    "divided_difference",
    "newton_coefficients",
    "newton_poly_derivative_at_newest",
]

MIN_NODES = 2
MAX_NODES = 5
# Nodes closer than 10**(-decimal_digits + 5), relative to the largest node
# magnitude, count as coincident.
SEPARATION_DIGITS = 5


@dataclass(frozen=True)
class NodeSet:
    """Interpolation abscissae (newest first) and the function values at them."""

    nodes: tuple[HighPrecisionReal, ...]
    values: tuple[HighPrecisionReal, ...]

    def __init__(self, nodes: Sequence[HighPrecisionReal], values: Sequence[HighPrecisionReal]):
        nodes = tuple(nodes)
        values = tuple(values)
        if len(nodes) != len(values):
            raise ArityError(f"{len(nodes)} nodes but {len(values)} values")
        if not MIN_NODES <= len(nodes) <= MAX_NODES:
            raise ArityError(f"need {MIN_NODES}..{MAX_NODES} nodes, got {len(nodes)}")
        ctx = nodes[0].context
        for v in nodes + values:
            if v.context != ctx:
                raise ContextMismatchError("all nodes and values must share one context")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)
        _check_distinct(nodes)

    def __len__(self):
        return len(self.nodes)

    @property
    def context(self):
        return self.nodes[0].context


def _check_distinct(nodes):
    ctx = nodes[0].context
    scale = max(abs(x) for x in nodes)
    if scale.is_zero():
        raise CoincidentNodesError("all interpolation nodes are zero")
    tol = scale * ctx.power_of_ten(-ctx.decimal_digits + SEPARATION_DIGITS)
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if abs(nodes[i] - nodes[j]) <= tol:
                raise CoincidentNodesError(
                    f"nodes {i} and {j} coincide to working precision"
                )


def newton_coefficients(ns: NodeSet) -> list[HighPrecisionReal]:
    """Top edge of the tableau: ``[f[x0], f[x0,x1], ..., f[x0..xn]]``."""
    xs = ns.nodes
    column = list(ns.values)
    top = [column[0]]
    for k in range(1, len(xs)):
        # column[i] holds f[x_i .. x_{i+k-1}] on entry
        column = [
            (column[i + 1] - column[i]) / (xs[i + k] - xs[i])
            for i in range(len(column) - 1)
        ]
        top.append(column[0])
    return top


def divided_difference(ns: NodeSet) -> HighPrecisionReal:
    """``f[x0, ..., xn]`` over all nodes of ``ns``."""
    return newton_coefficients(ns)[-1]


def newton_poly_derivative_at_newest(ns: NodeSet) -> HighPrecisionReal:
    """Derivative of the degree-3 or degree-4 Newton polynomial at ``nodes[0]``."""
    if len(ns) not in (4, 5):
        raise ArityError(f"derivative at newest node needs 4 or 5 nodes, got {len(ns)}")
    coeffs = newton_coefficients(ns)
    a = ns.nodes[0]
    result = coeffs[1]
    weight = None
    for k in range(2, len(coeffs)):
        step = a - ns.nodes[k - 1]
        weight = step if weight is None else weight * step
        result = result + coeffs[k] * weight
    return result
