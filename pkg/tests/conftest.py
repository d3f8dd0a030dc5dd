import pytest

from uavroute import Bounds, Point, Scenario, Threat, ThreatKind


@pytest.fixture
def empty_world():
    return Scenario("empty", Bounds(0, 100, 0, 100), (5, 5), (95, 95)).validate()


@pytest.fixture
def single_threat():
    """One radius-10 threat on the midpoint of a 100-unit start-goal line."""
    return Scenario(
        "single",
        Bounds(-10, 110, -60, 60),
        (0, 0),
        (100, 0),
        (Threat(Point(50, 0), 10.0, ThreatKind.RADAR),),
    ).validate()


ACCEPTANCE_LINES = []


def record_criterion(number, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
