import random

import pytest

from sbecdbed.codec import build_code
from sbecdbed.field import field_new


def clmul_mod(x, y, poly, b):
    """Reference multiply: shift-and-add, reducing after every shift."""
    acc = 0
    while y:
        if y & 1:
            acc ^= x
        y >>= 1
        x <<= 1
        if x >> b & 1:
            x ^= poly
    return acc


@pytest.fixture(scope="session")
def gf4():
    return field_new(2)


@pytest.fixture(scope="session")
def gf8():
    return field_new(3)


@pytest.fixture(scope="session")
def code_b2r5():
    return build_code(2, 5)


@pytest.fixture
def rnd():
    return random.Random(1234)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
