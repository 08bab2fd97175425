"""Shared test plumbing.

The acceptance tests register one line per criterion; printing them from
``pytest_terminal_summary`` keeps the lines visible even though pytest
captures stdout during the tests themselves.
"""

ACCEPTANCE_LINES = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
