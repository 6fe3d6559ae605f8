import pytest

from acceptance_results import RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(k.split(".")[0]), k)):
        ok, label, secs = RESULTS[key]
        terminalreporter.write_line(f"criterion {key:5s} {'PASS' if ok else 'FAIL'}  {label} ({secs:.1f}s)")
