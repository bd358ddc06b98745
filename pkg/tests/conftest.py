import random

import pytest

from gradedsrc.coeff import QQ, ZZ
from gradedsrc.gring import GroupRing
from gradedsrc.groups import FiniteGroup, FreeAbelian, FreeGroup


@pytest.fixture
def qf2():
    return GroupRing(FreeGroup(2), QQ)


@pytest.fixture
def zf2():
    return GroupRing(FreeGroup(2), ZZ)


@pytest.fixture
def qz():
    return GroupRing(FreeAbelian(1), QQ)


@pytest.fixture
def qz2():
    return GroupRing(FreeAbelian(2), QQ)


@pytest.fixture
def s3():
    return FiniteGroup.symmetric(3)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
