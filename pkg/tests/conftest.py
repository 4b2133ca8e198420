import pytest

from hocoalg import builtin


@pytest.fixture(scope="session")
def ex1():
    return builtin("example1")


@pytest.fixture(scope="session")
def ex2():
    return builtin("example2")


@pytest.fixture(scope="session")
def ex1_cinf():
    return builtin("example1-cinf")


def gens(C):
    return {g.name: g for g in C.space.generators}


@pytest.fixture
def word():
    def make(C, text):
        g = gens(C)
        return tuple(g[c] for c in text)
    return make


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(n, passed, detail)``."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def record(n, passed, detail):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {n}: {detail}"
        lines.append((n, line))
        print(line)
        return passed
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
