import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from nichols_roots.cyclofield import FieldSpec
from nichols_roots.freealg import Braiding2

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F12 = FieldSpec(12)
Z12 = F12.zeta()

# Values that make many of the monomial conditions true or false.
SCALAR_POOL = [Z12 ** j for j in range(12)] + [F12(v) for v in
                                               (2, -2, 3, Fraction(1, 2), Fraction(1, 3), Fraction(-1, 6))]


def scalars():
    return st.sampled_from(SCALAR_POOL)


@st.composite
def braidings(draw):
    return Braiding2(draw(scalars()), draw(scalars()), draw(scalars()), draw(scalars()))


def qrs(q, r, s):
    return Braiding2.from_qrs(q, r, s)


@pytest.fixture
def s1():
    return qrs(2, 3, -1)


@pytest.fixture
def s2():
    return qrs(2, 3, 5)


@pytest.fixture
def s3():
    return qrs(1, FieldSpec(6).zeta(), -1)


# One line per acceptance criterion, filled in by test_acceptance.py.
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
