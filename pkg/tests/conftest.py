import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    """Collect one pass/fail line per acceptance criterion for the final summary."""

    def record(line):
        ACCEPTANCE_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
