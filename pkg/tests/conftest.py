import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from pconway.semiring import BOOL, NAT, NATINF, NATMAT2  # noqa: E402
from pconway.series import SeriesSemiring  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def nat_xy():
    return SeriesSemiring(NAT, "xy", 4)


@pytest.fixture
def nat_xy3():
    return SeriesSemiring(NAT, "xy", 3)


@pytest.fixture
def bool_xy():
    return SeriesSemiring(BOOL, "xy", 4)


@pytest.fixture
def natinf_xy():
    return SeriesSemiring(NATINF, "xy", 4)


@pytest.fixture
def natmat2_xy():
    return SeriesSemiring(NATMAT2, "xy", 4)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
