import itertools

import pytest

from poplab.data import bundled_poset


@pytest.fixture(scope="session")
def fig1():
    return bundled_poset("fig1")


@pytest.fixture(scope="session")
def fig10():
    return bundled_poset("fig10")


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
