import pytest

from hfold import make_set

#: (criterion, description, passed, detail) rows collected by test_acceptance
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, name, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:>2}. {name}: {detail}")


@pytest.fixture
def S():
    """Shorthand set constructor."""
    return lambda *xs: make_set(xs)
