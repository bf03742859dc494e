import time
from contextlib import contextmanager

import pytest

_RESULTS: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Time a block against a limit and record one pass/fail line for it."""

    @contextmanager
    def run(number: int, name: str, limit: float):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - t0
            within = elapsed < limit
            status = "PASS" if ok and within else "FAIL"
            line = f"criterion {number} {status}: {name} ({elapsed:.2f}s, limit {limit:g}s)"
            _RESULTS[number] = line
            print(line)
        assert within, f"criterion {number} took {elapsed:.2f}s, limit {limit:g}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_RESULTS):
            terminalreporter.write_line(_RESULTS[n])
