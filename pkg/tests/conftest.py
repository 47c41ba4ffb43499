import sys
from pathlib import Path

import pytest
from mpmath import mp

sys.path.insert(0, str(Path(__file__).parent))

from kingroots import make_context  # noqa: E402

# the oracles in tests/oracles.py run on mpmath's global context
mp.dps = 1700

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _criteria.append((number, title, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, verdict in sorted(_criteria):
        terminalreporter.write_line(f"[{verdict}] AC{number:02d} {title}")


@pytest.fixture(scope="session")
def ctx():
    return make_context(1200)


@pytest.fixture(scope="session")
def small_ctx():
    return make_context(60, 20)


@pytest.fixture(scope="session")
def corpus(ctx):
    from kingroots.bench import builtin_corpus

    return {p.id: p for p in builtin_corpus(ctx)}
