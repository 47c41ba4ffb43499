"""Arbitrary-precision reals bound to an explicit decimal precision context.

Every value carries the :class:`PrecisionContext` it was created in, and
arithmetic between values from different contexts raises instead of silently
picking one precision. Machine floats are rejected outright; decimal literals
are parsed exactly at context precision, so ``"1.35"`` means 27/20 rounded
once, never a binary double.

The backend is mpmath. Each context owns a private ``MPContext`` whose
precision is fixed at construction, so no global precision state is touched
and contexts can be shared across threads read-only.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from mpmath.ctx_mp import MPContext
from mpmath.libmp import repr_dps, to_str

from .errors import ContextMismatchError, DecimalFormatError, DomainError, PrecisionTooLowError

__all__ = [
    "DEFAULT_DIGITS",
    "DEFAULT_GUARD_DIGITS",
    "MIN_DIGITS",
    "HighPrecisionReal",
    "PrecisionContext",
    "elementary",
    "format_decimal",
    "make_context",
    "parse_decimal",
]

DEFAULT_DIGITS = 1200
# Headroom beyond the nominal digits: order-12 iterations overshoot the nominal
# precision by one step, and their errors still have to be measurable.
DEFAULT_GUARD_DIGITS = 400
MIN_DIGITS = 50

_DECIMAL_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?\Z")


@dataclass(frozen=True)
class PrecisionContext:
    """Decimal precision for a family of values.

    Working precision is ``ceil((decimal_digits + guard_digits) * log2(10))``
    bits. Two contexts compare equal when both digit counts match.
    """

    decimal_digits: int = DEFAULT_DIGITS
    guard_digits: int = DEFAULT_GUARD_DIGITS
    _mp: MPContext = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.decimal_digits, int) or isinstance(self.decimal_digits, bool):
            raise TypeError("decimal_digits must be an int")
        if not isinstance(self.guard_digits, int) or isinstance(self.guard_digits, bool):
            raise TypeError("guard_digits must be an int")
        if self.decimal_digits < MIN_DIGITS:
            raise PrecisionTooLowError(
                f"decimal_digits={self.decimal_digits} is below the minimum of {MIN_DIGITS}"
            )
        if self.guard_digits < 0:
            raise ValueError("guard_digits must be non-negative")
        mp = MPContext()
        mp.prec = self.working_bits
        object.__setattr__(self, "_mp", mp)

    @property
    def working_digits(self) -> int:
        return self.decimal_digits + self.guard_digits

    @property
    def working_bits(self) -> int:
        return math.ceil(self.working_digits * math.log2(10))

    @property
    def backend(self) -> MPContext:
        """The private mpmath context (read-only use only)."""
        return self._mp

    def _wrap(self, mpf) -> HighPrecisionReal:
        obj = object.__new__(HighPrecisionReal)
        obj._v = mpf
        obj._ctx = self
        return obj

    def parse(self, text: str) -> HighPrecisionReal:
        return parse_decimal(text, self)

    def convert(self, value) -> HighPrecisionReal:
        """Bring an int, Fraction, decimal string or same-context value into this context."""
        if isinstance(value, HighPrecisionReal):
            if value._ctx != self:
                raise ContextMismatchError(
                    f"value bound to {value._ctx!r} used in {self!r}"
                )
            return value if value._ctx is self else self._wrap(value._v)
        if isinstance(value, str):
            return parse_decimal(value, self)
        if isinstance(value, bool):
            raise TypeError("bool is not a real number here")
        if isinstance(value, int):
            return self._wrap(self._mp.mpf(value))
        if isinstance(value, Fraction):
            return self._wrap(self._mp.mpf(value.numerator) / value.denominator)
        raise TypeError(
            f"cannot convert {type(value).__name__} to HighPrecisionReal "
            "(machine floats are rejected; pass a decimal string)"
        )

    def zero(self) -> HighPrecisionReal:
        return self._wrap(self._mp.zero)

    def one(self) -> HighPrecisionReal:
        return self._wrap(self._mp.one)

    def pi(self) -> HighPrecisionReal:
        return self._wrap(+self._mp.pi)

    def power_of_ten(self, exponent: int) -> HighPrecisionReal:
        """``10**exponent`` rounded once at working precision."""
        return self._wrap(self._mp.mpf(10) ** exponent)


@lru_cache(maxsize=None)
def _cached_context(decimal_digits: int, guard_digits: int) -> PrecisionContext:
    return PrecisionContext(decimal_digits, guard_digits)


def make_context(decimal_digits: int = DEFAULT_DIGITS, guard_digits: int = DEFAULT_GUARD_DIGITS) -> PrecisionContext:
    """Return the (shared) context for the given digit counts.

    Raises PrecisionTooLowError when ``decimal_digits < 50``.
    """
    if isinstance(decimal_digits, int) and not isinstance(decimal_digits, bool) and decimal_digits < MIN_DIGITS:
        raise PrecisionTooLowError(f"decimal_digits={decimal_digits} is below the minimum of {MIN_DIGITS}")
    return _cached_context(decimal_digits, guard_digits)


class HighPrecisionReal:
    """An immutable real number at the precision of its context."""

    __slots__ = ("_v", "_ctx")

    def __init__(self, value, context: PrecisionContext):
        converted = context.convert(value)
        self._v = converted._v
        self._ctx = context

    @property
    def value(self):
        """The underlying mpmath ``mpf``."""
        return self._v

    @property
    def context(self) -> PrecisionContext:
        return self._ctx

    def _other(self, other):
        if isinstance(other, HighPrecisionReal):
            if other._ctx is not self._ctx and other._ctx != self._ctx:
                raise ContextMismatchError(
                    f"cannot combine values from {self._ctx!r} and {other._ctx!r}"
                )
            return other._v
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return NotImplemented

    def _binary(self, other, op):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._ctx._wrap(op(self._v, o))

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __pow__(self, exponent):
        if isinstance(exponent, int) and not isinstance(exponent, bool):
            if exponent < 0 and not self._v:
                raise DomainError("pow", self, "zero raised to a negative power")
            return self._ctx._wrap(self._v ** exponent)
        if isinstance(exponent, HighPrecisionReal):
            return _pow(self, exponent)
        return NotImplemented

    def __rpow__(self, base):
        if isinstance(base, int) and not isinstance(base, bool):
            return _pow(self._ctx.convert(base), self)
        return NotImplemented

    def __neg__(self):
        return self._ctx._wrap(-self._v)

    def __pos__(self):
        return self

    def __abs__(self):
        return self._ctx._wrap(abs(self._v))

    def _compare(self, other, op):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return op(self._v, o)

    def __eq__(self, other):
        return self._compare(other, lambda a, b: a == b)

    def __ne__(self, other):
        result = self._compare(other, lambda a, b: a != b)
        return result

    def __lt__(self, other):
        return self._compare(other, lambda a, b: a < b)

    def __le__(self, other):
        return self._compare(other, lambda a, b: a <= b)

    def __gt__(self, other):
        return self._compare(other, lambda a, b: a > b)

    def __ge__(self, other):
        return self._compare(other, lambda a, b: a >= b)

    def __hash__(self):
        return hash(self._v)

    def __bool__(self):
        return bool(self._v)

    def __float__(self):
        return float(self._v)

    def __repr__(self):
        return f"HighPrecisionReal('{to_str(self._v._mpf_, 20)}', digits={self._ctx.decimal_digits})"

    def __str__(self):
        return format_decimal(self)

    def is_zero(self) -> bool:
        return not self._v

    def is_integer(self) -> bool:
        return self._ctx._mp.isint(self._v)

    def exp(self):
        return elementary("exp", self)

    def ln(self):
        return elementary("ln", self)

    def sin(self):
        return elementary("sin", self)

    def cos(self):
        return elementary("cos", self)

    def sqrt(self):
        return elementary("sqrt", self)

    def log10_abs(self) -> HighPrecisionReal:
        """``log10(|x|)``; used for digit counting, not part of the elementary set."""
        if not self._v:
            raise DomainError("log10", self)
        return self._ctx._wrap(self._ctx._mp.log10(abs(self._v)))


def _exp(x):
    return x._ctx._wrap(x._ctx._mp.exp(x._v))


def _ln(x):
    if x._v <= 0:
        raise DomainError("ln", x, f"ln: argument must be > 0, got {x!r}")
    return x._ctx._wrap(x._ctx._mp.ln(x._v))


def _sin(x):
    return x._ctx._wrap(x._ctx._mp.sin(x._v))


def _cos(x):
    return x._ctx._wrap(x._ctx._mp.cos(x._v))


def _sqrt(x):
    if x._v < 0:
        raise DomainError("sqrt", x, f"sqrt: argument must be >= 0, got {x!r}")
    return x._ctx._wrap(x._ctx._mp.sqrt(x._v))


def _pow(base, exponent):
    if base._ctx != exponent._ctx:
        raise ContextMismatchError("pow: base and exponent come from different contexts")
    mp = base._ctx._mp
    if mp.isint(exponent._v):
        n = int(exponent._v)
        if n < 0 and not base._v:
            raise DomainError("pow", base, "pow: zero raised to a negative power")
        return base._ctx._wrap(base._v ** n)
    if base._v <= 0:
        raise DomainError("pow", base, f"pow: non-integer exponent needs base > 0, got {base!r}")
    return base._ctx._wrap(mp.power(base._v, exponent._v))


_FUNCTIONS = {
    "exp": (1, _exp),
    "ln": (1, _ln),
    "sin": (1, _sin),
    "cos": (1, _cos),
    "sqrt": (1, _sqrt),
    "pow": (2, _pow),
}


def elementary(fn_name: str, *args: HighPrecisionReal, context: PrecisionContext | None = None) -> HighPrecisionReal:
    """Evaluate one of exp, ln, sin, cos, sqrt, pow, pi at context precision.

    ``pi`` takes no positional arguments and needs ``context``. Domain
    violations raise :class:`DomainError` naming the function and argument.
    """
    if fn_name == "pi":
        if args:
            raise TypeError("pi takes no arguments")
        if context is None:
            raise TypeError("pi needs a context")
        return context.pi()
    try:
        arity, fn = _FUNCTIONS[fn_name]
    except KeyError:
        raise ValueError(f"unknown elementary function {fn_name!r}") from None
    if len(args) != arity:
        raise TypeError(f"{fn_name} takes {arity} argument(s), got {len(args)}")
    for a in args:
        if not isinstance(a, HighPrecisionReal):
            raise TypeError(f"{fn_name}: arguments must be HighPrecisionReal")
        if context is not None and a._ctx != context:
            raise ContextMismatchError(f"{fn_name}: argument not bound to {context!r}")
    return fn(*args)


def format_decimal(x: HighPrecisionReal) -> str:
    """Decimal string that parses back to exactly ``x`` in its context.

    Tries ``working_digits`` significant digits first (short output for values
    that came from decimal literals) and falls back to the always-exact length.
    """
    ctx = x._ctx
    s = to_str(x._v._mpf_, ctx.working_digits)
    if ctx._mp.mpf(s) == x._v:
        return s
    return to_str(x._v._mpf_, repr_dps(ctx.working_bits))


def parse_decimal(text: str, context: PrecisionContext) -> HighPrecisionReal:
    """Parse ``[+-]digits[.digits][e[+-]N]`` exactly, rounding once to context precision."""
    if not isinstance(text, str):
        raise TypeError("expected a decimal string")
    s = text.strip()
    if not _DECIMAL_RE.match(s):
        raise DecimalFormatError(f"not a decimal literal: {text!r}")
    return context._wrap(context._mp.mpf(s))
