"""Shared pytest hooks.

The acceptance tests register one PASS/FAIL line per criterion here;
the terminal-summary hook echoes them at the end of the run so they
are visible even when pytest captures per-test stdout.
"""

CRITERION_LINES = []


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
