import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        status, detail = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {status} {detail}")
