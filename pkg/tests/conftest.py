import time

import pytest

from qtshuffle.limits import Limits
from qtshuffle.macdonald import ensure_bases

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def limits():
    return Limits()


@pytest.fixture
def bases4(limits):
    # the registry is process-wide and some tests clear it
    ensure_bases(4, limits)


class Criterion:
    """Times a block and records one PASS/FAIL line for the end-of-run summary."""

    def __init__(self, capsys):
        self.capsys = capsys

    def run(self, number: int, title: str, compute, budget: float):
        start = time.perf_counter()
        ok, detail = compute()
        elapsed = time.perf_counter() - start
        in_time = elapsed < budget
        verdict = "PASS" if ok and in_time else "FAIL"
        notes = [detail] if detail else []
        if not in_time:
            notes.append(f"over the {budget:g} s budget")
        line = f"criterion {number:2d} {verdict}  {title}  [{elapsed:.1f} s]" + (f"  {'; '.join(notes)}" if notes else "")
        ACCEPTANCE_LINES.append(line)
        with self.capsys.disabled():
            print("\n" + line)
        return ok, in_time, elapsed, detail


@pytest.fixture
def criterion(capsys):
    return Criterion(capsys)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
