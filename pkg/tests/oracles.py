"""Independent reference computations for the test suite.

Everything here uses mpmath's global context directly and never imports
kingroots internals, so the checks stay independent of the code under test.
Values cross the boundary as decimal strings.
"""

import itertools

import mpmath
from mpmath import mp, mpf


def to_mp(x):
    return mpf(str(x))


def f1(x):
    return mp.log(x**2 - 2 * x + 2) + mp.exp(x**2 - 5 * x + 4) * mp.sin(x - 1)


def f2(x):
    return mp.exp(x**2 + x * mp.cos(x) - 1) * mp.sin(mp.pi * x) + x * mp.log(x * mp.sin(x) + 1)


def f3(x):
    return (
        (1 - mp.sin(x**2)) * (1 + x**2) / (1 + x**3)
        + x * mp.log(x**2 - mp.pi + 1)
        - (1 + mp.pi) / (1 + mp.sqrt(mp.pi**3))
    )


def lagrange_divided_difference(xs, fs):
    """f[x0..xn] = sum_i f(x_i) / prod_{j != i} (x_i - x_j)."""
    total = mpf(0)
    for i, (xi, fi) in enumerate(zip(xs, fs)):
        den = mpf(1)
        for j, xj in enumerate(xs):
            if j != i:
                den *= xi - xj
        total += fi / den
    return total


def _poly_mul_linear(coeffs, root):
    """(sum c_k t^k) * (t - root), coefficients lowest degree first."""
    out = [mpf(0)] * (len(coeffs) + 1)
    for k, c in enumerate(coeffs):
        out[k + 1] += c
        out[k] -= c * root
    return out


def newton_poly_monomial(xs, fs):
    """Expand the Newton interpolant into monomial coefficients (lowest first)."""
    poly = [mpf(0)]
    basis = [mpf(1)]
    for k in range(len(xs)):
        c = lagrange_divided_difference(xs[: k + 1], fs[: k + 1])
        poly = [a + b for a, b in itertools.zip_longest(poly, [c * b for b in basis], fillvalue=mpf(0))]
        basis = _poly_mul_linear(basis, xs[k])
    return poly


def poly_derivative_at(coeffs, t):
    return sum(k * c * t ** (k - 1) for k, c in enumerate(coeffs) if k > 0)


def newton_derivative_oracle(xs, fs):
    """Differentiate the expanded Newton polynomial term by term at xs[0]."""
    return poly_derivative_at(newton_poly_monomial(xs, fs), xs[0])


def two_point_reference(f, x, beta, gamma, G):
    """Straight-line transcription of the derivative-free two-point King step."""
    fx = f(x)
    w = x - beta * fx
    fw = f(w)
    y = x - beta * fx**2 / (fx - fw)
    fy = f(y)
    fyw = (fy - fw) / (y - w)
    t = fy / fx
    return y - (fx + gamma * fy) / (fx + (gamma - 2) * fy) * fy / fyw * G(t)


def three_point_reference(f, x, beta, gamma, G):
    fx = f(x)
    w = x - beta * fx
    fw = f(w)
    y = x - beta * fx**2 / (fx - fw)
    fy = f(y)
    fyw = (fy - fw) / (y - w)
    t = fy / fx
    z = y - (fx + gamma * fy) / (fx + (gamma - 2) * fy) * fy / fyw * G(t)
    fz = f(z)
    d1 = (fz - fy) / (z - y)
    d2 = (d1 - (fy - fx) / (y - x)) / (z - x)
    d_yxw = ((fy - fx) / (y - x) - (fx - fw) / (x - w)) / (y - w)
    d3 = (d2 - d_yxw) / (z - w)
    return z - fz / (d1 + d2 * (z - y) + d3 * (z - y) * (z - x)), (x, w, y, z), (fx, fw, fy, fz)


def agreeing_digits(a, b):
    """-log10 of the relative difference (inf when identical)."""
    a, b = to_mp(a), to_mp(b)
    if a == b:
        return mpmath.inf
    scale = max(abs(a), abs(b), mpf(1))
    return -mpmath.log10(abs(a - b) / scale)
