import os
import sys
import time

sys.path.insert(0, os.path.dirname(__file__))

_START = {}


def pytest_sessionstart(session):
    _START["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
        elapsed = time.perf_counter() - _START.get("t", time.perf_counter())
        terminalreporter.write_line(f"suite runtime {elapsed:.1f} s (budget 60 s)")
