"""Shared pytest hooks.

The acceptance suite records one line per criterion in ``ACCEPTANCE_LINES``;
they are printed together at the end of the session so they show up in the
normal ``pytest -v`` output without needing ``-s``.
"""

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
