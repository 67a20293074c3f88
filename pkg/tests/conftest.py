import pytest

from cycgrad.algebra import AlgebraContext


@pytest.fixture
def ctx2():
    return AlgebraContext(2)


ACCEPTANCE = {}


@pytest.fixture
def acceptance(request):
    """Record a one-line verdict for an acceptance criterion."""

    def record(label, ok, detail=""):
        ACCEPTANCE[label] = (ok, detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
