import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gtkl.verify import Workspace  # noqa: E402


@pytest.fixture(scope="session")
def ws():
    """One KL table and cache of modules for the whole session."""
    return Workspace()


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the assertion decides the pytest outcome."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
