"""Shared pytest plumbing: the acceptance verdict recorder.

Capture in fd mode swallows prints even on sys.__stdout__, so the
acceptance tests record their one-line verdicts here and a terminal
summary section replays them after capture ends.  The lines are also
printed normally so a failing criterion shows its verdict next to the
traceback.
"""

import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def verdict():
    def record(criterion: int, ok: bool, detail: str) -> None:
        status = "PASS" if ok else "FAIL"
        line = f"acceptance criterion {criterion:2d}: {status} ({detail})"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
