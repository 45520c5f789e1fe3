import itertools
from functools import lru_cache

import pytest

from tdloco.enumeration import code_params


@lru_cache(maxsize=None)
def brute_words(m):
    """Sorted valid words by filtering the full product; independent of the DFS oracle."""
    return [
        w for w in itertools.product(range(4), repeat=m)
        if not any(w[i:i + 3] == (3, 0, 3) for i in range(m - 2))
    ]


@pytest.fixture
def params():
    return code_params


ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = getattr(item.function, "criterion", None)
    if label and (rep.when == "call" or (rep.when == "setup" and rep.failed)):
        ACCEPTANCE.append((label, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")
