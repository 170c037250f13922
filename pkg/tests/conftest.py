from pathlib import Path

import pytest

from eulertrails.fileformat import load

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / name


@pytest.fixture
def loaded():
    return lambda name: load(FIXTURES / name)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
