import pytest

from linecong.report import Workspace

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def workspace():
    """Shared focal threefolds, resolutions and congruences for master seed 1 over GF(32003)."""
    return Workspace(1, 32003)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
