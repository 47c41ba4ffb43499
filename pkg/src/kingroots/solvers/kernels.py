"""One-iteration kernels.

Proposed methods (two-point, three-point) step with ``w = x - beta*f(x)``;
the competitor kernels (Kung-Traub, Sharma, Zheng) use ``w = x + beta*f(x)``.
Both sign conventions are kept so each trace reads exactly like the
textbook form of its scheme. Each kernel evaluates ``f`` at most four times
per call and accepts a precomputed ``f(x)`` so the driver's stopping test
costs nothing extra.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from ..errors import ArityError, CoincidentNodesError, ConfigError, DegenerateDenominatorError, ZeroDerivativeError
from ..interp import NodeSet, divided_difference, newton_poly_derivative_at_newest
from ..mpreal import HighPrecisionReal
from .weights import WeightFunction, get_weight

__all__ = [
    "COMPETITOR_KERNELS",
    "KERNELS",
    "IterationRecord",
    "MethodSpec",
    "kung_traub_step",
    "sharma_step",
    "step",
    "three_point_step",
    "two_point_step",
    "update_beta",
    "zheng_step",
]

Function = Callable[[HighPrecisionReal], HighPrecisionReal]

KERNELS = ("two_point", "three_point", "kung_traub", "sharma", "zheng")
COMPETITOR_KERNELS = ("kung_traub", "sharma", "zheng")


@dataclass(frozen=True)
class MethodSpec:
    """Which kernel to run and with which free parameters.

    ``weight`` applies to the two-point and three-point kernels only and
    defaults to G1 there. ``memory=False`` freezes beta at ``beta0``.
    """

    kernel: str
    gamma: HighPrecisionReal
    beta0: HighPrecisionReal
    weight: WeightFunction | None = None
    memory: bool = True

    def __post_init__(self):
        if self.kernel not in KERNELS:
            raise ConfigError(f"unknown kernel {self.kernel!r}; choose from {KERNELS}")
        if self.beta0.is_zero():
            raise ConfigError("beta0 must be nonzero")
        if self.gamma.context != self.beta0.context:
            raise ConfigError("gamma and beta0 must share one precision context")
        if self.kernel in COMPETITOR_KERNELS:
            if self.weight is not None:
                raise ConfigError(f"{self.kernel} takes no weight function")
        elif self.weight is None:
            object.__setattr__(self, "weight", get_weight("G1"))
        if self.kernel == "two_point" and self.memory:
            raise ConfigError("the two-point kernel has no memory variant (no z node to interpolate)")

    @property
    def context(self):
        return self.beta0.context

    @property
    def is_competitor(self) -> bool:
        return self.kernel in COMPETITOR_KERNELS

    @property
    def label(self) -> str:
        if self.kernel == "three_point" and self.weight.id in ("G1", "G2", "G3", "G4"):
            return "m" + self.weight.id[1]
        if self.kernel == "three_point":
            return f"three-point/{self.weight.id}"
        if self.kernel == "two_point":
            return "two-point" if self.weight.id == "G1" else f"two-point/{self.weight.id}"
        return {"kung_traub": "kt", "sharma": "sharma", "zheng": "zheng"}[self.kernel]


@dataclass(frozen=True)
class IterationRecord:
    """State of one iteration; ``z``/``fz`` are None for the two-point kernel."""

    n: int
    x: HighPrecisionReal
    w: HighPrecisionReal
    y: HighPrecisionReal
    z: HighPrecisionReal | None
    fx: HighPrecisionReal
    fw: HighPrecisionReal
    fy: HighPrecisionReal
    fz: HighPrecisionReal | None
    beta: HighPrecisionReal
    x_next: HighPrecisionReal
    abs_error: HighPrecisionReal | None = None


def _nonzero(value, term):
    if value.is_zero():
        raise DegenerateDenominatorError(term)
    return value


def _slope(a, fa, b, fb, term):
    """f[a, b], raising if the nodes coincide or the slope vanishes."""
    return _nonzero(_nonzero(fb - fa, term) / _nonzero(b - a, term), term)


def _king_substeps(x, fx, w, fw, f, beta, gamma, weight):
    """The two derivative-free King substeps shared by both proposed kernels."""
    y = x - beta * fx * fx / _nonzero(fx - fw, "f(x)-f(w)")
    fy = f(y)
    king_den = _nonzero(fx + (gamma - 2) * fy, "f(x)+(gamma-2)f(y)")
    fyw = _nonzero((fy - fw) / _nonzero(y - w, "f[y,w]"), "f[y,w]")
    t = fy / fx
    z = y - (fx + gamma * fy) / king_den * (fy / fyw) * weight(t)
    return y, fy, z


def _third_substep(z, fz, y, fy, x, fx, w, fw):
    """z - f(z)/N3'(z) over the nodes (z, y, x, w)."""
    if fz.is_zero():
        return z
    slope = newton_poly_derivative_at_newest(NodeSet((z, y, x, w), (fz, fy, fx, fw)))
    return z - fz / _nonzero(slope, "N3'(z)")


def _finish(n, x, w, y, z, fx, fw, fy, fz, beta):
    partial = IterationRecord(n, x, w, y, z, fx, fw, fy, fz, beta, x_next=z)
    try:
        x_next = _third_substep(z, fz, y, fy, x, fx, w, fw)
    except CoincidentNodesError as exc:
        raise CoincidentNodesError(str(exc), record=partial) from exc
    return replace(partial, x_next=x_next)


def _check_kernel(spec, *expected):
    if spec.kernel not in expected:
        raise ConfigError(f"kernel {spec.kernel!r} passed to a {expected[0]} step")


def two_point_step(x: HighPrecisionReal, spec: MethodSpec, f: Function, *, beta=None, fx=None, n: int = 0) -> IterationRecord:
    """One fourth-order derivative-free King step (three evaluations)."""
    _check_kernel(spec, "two_point")
    beta = spec.beta0 if beta is None else beta
    fx = f(x) if fx is None else fx
    w = x - beta * fx
    fw = f(w)
    y, fy, x_next = _king_substeps(x, fx, w, fw, f, beta, spec.gamma, spec.weight)
    return IterationRecord(n, x, w, y, None, fx, fw, fy, None, beta, x_next)


def three_point_step(x: HighPrecisionReal, spec: MethodSpec, f: Function, *, beta=None, fx=None, n: int = 0) -> IterationRecord:
    """Two King substeps followed by a Newton step with N3'(z) as the derivative."""
    _check_kernel(spec, "three_point")
    beta = spec.beta0 if beta is None else beta
    fx = f(x) if fx is None else fx
    w = x - beta * fx
    fw = f(w)
    y, fy, z = _king_substeps(x, fx, w, fw, f, beta, spec.gamma, spec.weight)
    fz = f(z)
    return _finish(n, x, w, y, z, fx, fw, fy, fz, beta)


def kung_traub_step(x: HighPrecisionReal, spec: MethodSpec, f: Function, *, beta=None, fx=None, n: int = 0) -> IterationRecord:
    _check_kernel(spec, "kung_traub")
    beta = spec.beta0 if beta is None else beta
    fx = f(x) if fx is None else fx
    w = x + beta * fx
    fw = f(w)
    y = x - fx / _slope(w, fw, x, fx, "f[w,x]")
    fy = f(y)
    z = y - fy * fw / _nonzero((fw - fy) * _slope(x, fx, y, fy, "f[x,y]"), "(f(w)-f(y))f[x,y]")
    fz = f(z)
    if fz.is_zero():
        x_next = z
    else:
        correction = fy * fw * (y - x + fx / _slope(x, fx, z, fz, "f[x,z]"))
        x_next = (
            z
            - correction / _nonzero((fy - fz) * (fw - fz), "(f(y)-f(z))(f(w)-f(z))")
            + fy / _slope(y, fy, z, fz, "f[y,z]")
        )
    return IterationRecord(n, x, w, y, z, fx, fw, fy, fz, beta, x_next)


def sharma_step(x: HighPrecisionReal, spec: MethodSpec, f: Function, *, beta=None, fx=None, n: int = 0) -> IterationRecord:
    _check_kernel(spec, "sharma")
    beta = spec.beta0 if beta is None else beta
    fx = f(x) if fx is None else fx
    w = x + beta * fx
    fw = f(w)
    phi = _nonzero((fw - fx) / _nonzero(beta * fx, "beta f(x)"), "phi(x)")
    y = x - fx / phi
    fy = f(y)
    u = fy / fx
    v = fy / _nonzero(fw, "f(w)")
    z = y - (1 + u) / _nonzero(1 - v, "1-v") * fy / phi
    fz = f(z)
    return _finish(n, x, w, y, z, fx, fw, fy, fz, beta)


def zheng_step(x: HighPrecisionReal, spec: MethodSpec, f: Function, *, beta=None, fx=None, n: int = 0) -> IterationRecord:
    _check_kernel(spec, "zheng")
    beta = spec.beta0 if beta is None else beta
    fx = f(x) if fx is None else fx
    w = x + beta * fx
    fw = f(w)
    y = x - fx / _slope(x, fx, w, fw, "f[x,w]")
    fy = f(y)
    try:
        fyxw = divided_difference(NodeSet((y, x, w), (fy, fx, fw)))
    except CoincidentNodesError as exc:
        # y and w both on the root to working precision (beta near -1/f'(alpha))
        partial = IterationRecord(n, x, w, y, y, fx, fw, fy, fy, beta, x_next=y)
        raise CoincidentNodesError(str(exc), record=partial) from exc
    den = _nonzero((fx - fy) / _nonzero(x - y, "f[y,x]") + fyxw * (y - x), "f[y,x]+f[y,x,w](y-x)")
    z = y - fy / den
    fz = f(z)
    return _finish(n, x, w, y, z, fx, fw, fy, fz, beta)


_STEPS = {
    "two_point": two_point_step,
    "three_point": three_point_step,
    "kung_traub": kung_traub_step,
    "sharma": sharma_step,
    "zheng": zheng_step,
}


def step(x: HighPrecisionReal, spec: MethodSpec, f: Function, **kwargs) -> IterationRecord:
    """Dispatch to the kernel named by ``spec.kernel``."""
    return _STEPS[spec.kernel](x, spec, f, **kwargs)


def update_beta(prev: IterationRecord, x_new: HighPrecisionReal, f: Function, fx_new=None) -> HighPrecisionReal:
    """``1/N4'(x_new)`` over the nodes (x_new, z, y, w, x) of the previous step.

    Competitor kernels use the negated value (their w carries a plus sign).
    """
    if prev.z is None:
        raise ArityError("memory update needs a previous step with a z node")
    fx_new = f(x_new) if fx_new is None else fx_new
    ns = NodeSet(
        (x_new, prev.z, prev.y, prev.w, prev.x),
        (fx_new, prev.fz, prev.fy, prev.fw, prev.fx),
    )
    slope = newton_poly_derivative_at_newest(ns)
    if slope.is_zero():
        raise ZeroDerivativeError("N4'(x_n) vanished; cannot form beta_n")
    return 1 / slope
