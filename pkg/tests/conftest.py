""" Shared fixtures: algebra contexts and pairs are expensive to build, so
    they are created once per test session.
"""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent.joinpath("src", "python")))

from qsympairs import api  # noqa: E402
from qsympairs.uq import algebra_init  # noqa: E402


@pytest.fixture(scope="session")
def a1():
    return algebra_init("A1", 12)


@pytest.fixture(scope="session")
def a2():
    return algebra_init("A2", 8)


@pytest.fixture(scope="session")
def b2():
    return algebra_init("B2", 8)


@pytest.fixture(scope="session")
def a1a1():
    return algebra_init("A1xA1", 6)


@pytest.fixture(scope="session")
def a1split(a1):
    return api.load_pair("P1", ctx=a1)


@pytest.fixture(scope="session")
def a2split(a2):
    return api.load_pair("P2", ctx=a2)


@pytest.fixture(scope="session")
def a2flip(a2):
    return api.load_pair("P3", ctx=a2)


@pytest.fixture(scope="session")
def a2levi(a2):
    return api.load_pair("P4", ctx=a2)


@pytest.fixture(scope="session")
def a1a1flip(a1a1):
    return api.load_pair("P5", ctx=a1a1)
