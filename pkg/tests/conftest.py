from __future__ import annotations

import pytest

from somino.tower import Block, Tower

# Example towers as (x, y) lower-left corner, width.
RESTRICTED_COORDS = [(0, 0), (2, 0), (-1, 1), (3, 1), (2, 2), (-2, 2), (1, 3), (3, 3), (2, 4)]
STACKED_COORDS = [(0, 0), (2, 0), (0, 1), (3, 1), (2, 2), (-1, 2), (-1, 3), (2, 3), (4, 2)]
MIXED_COORDS = [(0, 0, 3), (2, 1, 4), (4, 2, 3), (5, 3, 3), (1, 2, 3), (3, 4, 3), (0, 3, 2), (1, 5, 4)]


def dominoes(coords, platform=None) -> Tower:
    return Tower((2,), [Block(y, x, 2) for x, y in coords], platform)


@pytest.fixture
def restricted_tower() -> Tower:
    return dominoes(RESTRICTED_COORDS)


@pytest.fixture
def stacked_tower() -> Tower:
    return dominoes(STACKED_COORDS)


@pytest.fixture
def mixed_tower() -> Tower:
    return Tower((2, 3, 4), [Block(y, x, w) for x, y, w in MIXED_COORDS])


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
