"""Weight functions G(t), t = f(y)/f(x), for the second substep."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..mpreal import HighPrecisionReal

__all__ = ["WEIGHTS", "WeightCheck", "WeightFunction", "get_weight", "validate_weight"]


@dataclass(frozen=True)
class WeightFunction:
    id: str
    eval: Callable[[HighPrecisionReal], HighPrecisionReal]

    def __call__(self, t: HighPrecisionReal) -> HighPrecisionReal:
        return self.eval(t)


def _g1(t):
    return 1 - t


def _g2(t):
    return 1 - t / (1 + t)


def _g3(t):
    return (1 - 2 * t) / (1 - t)


def _g4(t):
    return (1 - t) ** ((2 * t + 1) / (t + 1))


WEIGHTS = {
    "G1": WeightFunction("G1", _g1),
    "G2": WeightFunction("G2", _g2),
    "G3": WeightFunction("G3", _g3),
    "G4": WeightFunction("G4", _g4),
}


def get_weight(weight_id: str) -> WeightFunction:
    try:
        return WEIGHTS[weight_id.upper()]
    except KeyError:
        raise KeyError(f"unknown weight function {weight_id!r}; choose from {sorted(WEIGHTS)}") from None


@dataclass(frozen=True)
class WeightCheck:
    passed: bool
    value_at_zero: HighPrecisionReal
    slope_at_zero: HighPrecisionReal
    value_deviation: HighPrecisionReal
    slope_deviation: HighPrecisionReal


def validate_weight(
    weight: WeightFunction,
    gamma: HighPrecisionReal,
    value_tol: HighPrecisionReal | None = None,
    slope_tol: HighPrecisionReal | None = None,
) -> WeightCheck:
    """Check the pair conditions G(0) = 1 and G'(0) = 2*gamma - 1.

    G'(0) is a central difference with step 10**(-digits/3). Default
    tolerances are 10**(-digits+10) for the value and 10**(-digits/2) for
    the slope.

    Note that the measured order of the kernels only depends on G'(0) = -1;
    the gamma coupling is checked as stated, not as observed.
    """
    ctx = gamma.context
    d = ctx.decimal_digits
    if value_tol is None:
        value_tol = ctx.power_of_ten(-d + 10)
    if slope_tol is None:
        slope_tol = ctx.power_of_ten(-(d // 2))
    h = ctx.power_of_ten(-(d // 3))
    zero = ctx.zero()
    g0 = weight(zero)
    slope = (weight(h) - weight(-h)) / (2 * h)
    value_dev = abs(g0 - 1)
    slope_dev = abs(slope - (2 * gamma - 1))
    return WeightCheck(
        passed=bool(value_dev < value_tol and slope_dev < slope_tol),
        value_at_zero=g0,
        slope_at_zero=slope,
        value_deviation=value_dev,
        slope_deviation=slope_dev,
    )
