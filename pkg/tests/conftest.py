import re

import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    lines = request.config.stash.setdefault(_LINES, [])
    recorded = []

    def record(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title}"
        if detail:
            line += f" [{detail}]"
        lines.append(line)
        recorded.append(line)
        print(line)
        assert ok, line

    yield record
    if not recorded:
        m = re.search(r"criterion_(\d+)", request.node.name)
        number = int(m.group(1)) if m else 0
        lines.append(f"FAIL criterion {number:>2}: {request.node.name} raised before reporting")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
