import itertools
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kingroots.errors import ArityError, CoincidentNodesError, ContextMismatchError
from kingroots.interp import NodeSet, divided_difference, newton_coefficients, newton_poly_derivative_at_newest
from kingroots.mpreal import make_context
from kingroots.solvers import MethodSpec, get_weight, run_method
from kingroots.bench import builtin_problem

from oracles import agreeing_digits, f1, lagrange_divided_difference, newton_derivative_oracle, to_mp

CTX = make_context(1200)
D = CTX.decimal_digits


def nodeset(f, xs):
    xs = [CTX.convert(x) for x in xs]
    return NodeSet(xs, [f(x) for x in xs])


def test_first_difference_of_square():
    assert divided_difference(nodeset(lambda x: x * x, [1, 3])) == 4


def test_third_difference_of_monic_cubic():
    assert divided_difference(nodeset(lambda x: x**3, [0, 1, 2, 3])) == 1


def test_f1_slope_matches_independent_evaluation():
    from kingroots.bench.problems import _f1

    got = divided_difference(nodeset(_f1, [CTX.parse("1.35"), CTX.parse("1.34")]))
    expected = (f1(mpmath.mpf("1.35")) - f1(mpmath.mpf("1.34"))) / mpmath.mpf("0.01")
    assert agreeing_digits(got, expected) >= D - 5


def test_cubic_derivative_at_newest():
    assert newton_poly_derivative_at_newest(nodeset(lambda x: x**3, [2, 1, 0, -1])) == 12


def test_quartic_derivative_at_newest():
    ns = nodeset(lambda x: x**4, [1, CTX.parse("0.5"), 0, CTX.parse("-0.5"), -1])
    assert newton_poly_derivative_at_newest(ns) == 4


def test_f2_trace_nodes_match_expansion_oracle():
    ctx = make_context(1200)
    problem = builtin_problem("f2", ctx)
    spec = MethodSpec("three_point", ctx.zero(), ctx.parse("0.01"), weight=get_weight("G1"), memory=False)
    rec = run_method(problem, spec, max_iters=1).trace[0]
    f = problem.f
    for nodes in [(rec.z, rec.y, rec.x, rec.w), (rec.x_next, rec.z, rec.y, rec.w, rec.x)]:
        values = [f(v) for v in nodes]
        got = newton_poly_derivative_at_newest(NodeSet(nodes, values))
        expected = newton_derivative_oracle([to_mp(v) for v in nodes], [to_mp(v) for v in values])
        assert agreeing_digits(got, expected) >= D - 10


def test_coefficients_match_lagrange_form():
    xs = [CTX.parse(s) for s in ("0.3", "-1.1", "2.25", "0.9", "-0.4")]
    ns = NodeSet(xs, [x.exp() for x in xs])
    mxs = [to_mp(x) for x in xs]
    for k, c in enumerate(newton_coefficients(ns)):
        expected = lagrange_divided_difference(mxs[: k + 1], [mpmath.exp(x) for x in mxs[: k + 1]])
        assert agreeing_digits(c, expected) >= D - 10


def test_far_node_leaves_cubic_derivative_unchanged():
    cubic = lambda x: 2 * x**3 - x + 5  # noqa: E731
    base = [CTX.parse("1.5"), CTX.parse("0.75"), CTX.zero(), CTX.parse("-0.5")]
    n3 = newton_poly_derivative_at_newest(nodeset(cubic, base))
    for far in (10, 10**3, 10**6, 10**12):
        n4 = newton_poly_derivative_at_newest(nodeset(cubic, base + [CTX.convert(far)]))
        assert agreeing_digits(n4, n3) >= D - 10


@pytest.mark.parametrize("count", [0, 1, 6])
def test_arity_bounds(count):
    with pytest.raises(ArityError):
        nodeset(lambda x: x, range(1, count + 1))


def test_length_mismatch():
    with pytest.raises(ArityError):
        NodeSet([CTX.one(), CTX.convert(2)], [CTX.one()])


def test_derivative_needs_four_or_five_nodes():
    with pytest.raises(ArityError):
        newton_poly_derivative_at_newest(nodeset(lambda x: x, [1, 2, 3]))


def test_coincident_nodes():
    x = CTX.parse("1.5")
    with pytest.raises(CoincidentNodesError):
        nodeset(lambda t: t, [x, CTX.one(), x + CTX.power_of_ten(-D + 2)])
    # just outside the separation threshold is accepted
    nodeset(lambda t: t, [x, x + CTX.power_of_ten(-D + 8)])


def test_mixed_contexts_rejected():
    other = make_context(80)
    with pytest.raises(ContextMismatchError):
        NodeSet([CTX.one(), other.convert(2)], [CTX.one(), CTX.one()])


distinct_nodes = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=1000), min_size=2, max_size=5, unique=True
).filter(lambda xs: min(abs(a - b) for a, b in itertools.combinations(xs, 2)) > Fraction(1, 1000))


@settings(max_examples=40, deadline=None)
@given(distinct_nodes, st.permutations(range(5)))
def test_divided_difference_is_symmetric(xs, perm):
    ns = nodeset(lambda x: x.sin() + x * x, [CTX.convert(x) for x in xs])
    order = [i for i in perm if i < len(xs)]
    shuffled = NodeSet([ns.nodes[i] for i in order], [ns.values[i] for i in order])
    assert agreeing_digits(divided_difference(shuffled), divided_difference(ns)) >= D - 10


@settings(max_examples=40, deadline=None)
@given(distinct_nodes)
def test_newton_polynomial_interpolates(xs):
    ns = nodeset(lambda x: x.exp(), [CTX.convert(x) for x in xs])
    coeffs = newton_coefficients(ns)
    for x, fx in zip(ns.nodes, ns.values):
        acc, basis = CTX.zero(), CTX.one()
        for c, node in zip(coeffs, ns.nodes):
            acc = acc + c * basis
            basis = basis * (x - node)
        assert agreeing_digits(acc, fx) >= D - 10


@settings(max_examples=60, deadline=None)
@given(
    distinct_nodes.filter(lambda xs: len(xs) >= 4),
    st.lists(st.integers(-50, 50), min_size=5, max_size=5),
)
def test_derivative_exact_on_polynomials(xs, coeffs):
    degree = len(xs) - 1
    coeffs = coeffs[: degree + 1]

    def p(x):
        return sum((c * x**k for k, c in enumerate(coeffs)), CTX.zero())

    a = Fraction(xs[0])
    exact = sum(k * c * a ** (k - 1) for k, c in enumerate(coeffs) if k)
    got = newton_poly_derivative_at_newest(nodeset(p, [CTX.convert(x) for x in xs]))
    assert agreeing_digits(got, mpmath.mpf(exact.numerator) / exact.denominator) >= D - 10
