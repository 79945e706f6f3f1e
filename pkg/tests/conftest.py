import pytest

_acceptance_lines = []


@pytest.fixture(scope="session")
def acceptance_report():
    """Accumulates one pass/fail line per acceptance criterion; the terminal
    summary hook prints them after capture ends so they are always visible."""
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
