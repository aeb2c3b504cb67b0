"""Collects acceptance verdicts and prints them after the run."""
import time
from contextlib import contextmanager

import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """``with criterion(k, title, seconds):`` records PASS/FAIL and enforces the time limit."""

    @contextmanager
    def run(k: int, title: str, seconds: float):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            ACCEPTANCE_LINES.append(f"FAIL criterion {k}: {title} ({type(exc).__name__}: {exc})")
            print(ACCEPTANCE_LINES[-1])
            raise
        took = time.perf_counter() - start
        ok = took < seconds
        line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {title} [{took:.2f}s, limit {seconds:g}s]"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return run
