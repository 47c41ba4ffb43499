import mpmath
import pytest

from kingroots.bench import BUILTIN_IDS, builtin_corpus, builtin_problem, expression_problem
from kingroots.errors import BasinEscapeError
from kingroots.mpreal import make_context

from oracles import agreeing_digits, f1, f2, f3, to_mp

CTX = make_context(1200)
ORACLES = {"f1": f1, "f2": f2, "f3": f3}
# sample points inside each function's domain (f3 needs x^2 > pi - 1)
POINTS = {"f1": ("1.35", "0.6", "0.9"), "f2": ("0.6", "0.25", "-0.1"), "f3": ("1.7", "1.5", "2.25")}


def test_corpus_contents(corpus):
    assert list(corpus) == list(BUILTIN_IDS)
    assert [str(p.x0) for p in corpus.values()] == ["1.35", "0.6", "1.7"]
    for p in corpus.values():
        assert p.reference_root is not None
        assert p.x0 != p.reference_root


def test_known_roots(corpus):
    assert corpus["f1"].reference_root == 1
    assert corpus["f2"].reference_root == 0
    assert agreeing_digits(corpus["f3"].reference_root, mpmath.sqrt(mpmath.pi)) >= 1190


def test_f1_vanishes_at_one():
    assert builtin_problem("f1", CTX, refine=False).f(CTX.one()).is_zero()


def test_f2_vanishes_at_zero():
    assert builtin_problem("f2", CTX, refine=False).f(CTX.zero()).is_zero()


def test_f3_vanishes_at_sqrt_pi():
    f = builtin_problem("f3", CTX, refine=False).f
    assert abs(f(CTX.pi().sqrt())) < CTX.power_of_ten(-1200)


@pytest.mark.parametrize("pid", BUILTIN_IDS)
def test_transcription_matches_oracle(pid, corpus):
    problem = corpus[pid]
    for x in POINTS[pid]:
        got = problem.f(CTX.parse(x))
        assert agreeing_digits(got, ORACLES[pid](mpmath.mpf(x))) >= 1190
    assert abs(problem.f(problem.reference_root)) < CTX.power_of_ten(-1180)


@pytest.mark.parametrize("pid", BUILTIN_IDS)
def test_expression_form_agrees_with_builtin(pid, corpus):
    problem = corpus[pid]
    user = expression_problem(problem.expression, problem.x0, problem.root_hint)
    for x in POINTS[pid]:
        assert agreeing_digits(user.f(CTX.parse(x)), problem.f(CTX.parse(x))) >= 1190
    assert agreeing_digits(user.reference_root, problem.reference_root) >= 1190 or abs(user.reference_root) < CTX.power_of_ten(-1190)


def test_expression_problem_refines_from_hint():
    p = expression_problem("x^3 - 2", CTX.parse("1.3"))
    assert p.id == "expr:x^3 - 2"
    assert agreeing_digits(p.reference_root, mpmath.cbrt(2)) >= 1190


def test_expression_problem_without_nearby_root():
    with pytest.raises(BasinEscapeError):
        expression_problem("exp(x)", CTX.one())


def test_default_context_is_1200_digits():
    assert builtin_problem("f1", refine=False).context.decimal_digits == 1200


def test_with_x0():
    p = builtin_problem("f1", CTX).with_x0(CTX.parse("1.2"))
    assert p.x0 == CTX.parse("1.2") and p.reference_root == 1
