from fractions import Fraction

import pytest
from hypothesis import strategies as st

from projplane import sampling

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero = small.filter(lambda x: x != 0)


def vectors(size):
    return st.tuples(*[small] * size).filter(lambda v: any(c != 0 for c in v))


@pytest.fixture
def rng():
    return sampling.spawn(12345, "tests")


def brute_proportional(u, v):
    """Find k with u = k v by division, then check every coordinate."""
    pivot = next((i for i, c in enumerate(v) if c != 0), None)
    if pivot is None:
        return False
    k = Fraction(u[pivot]) / Fraction(v[pivot])
    return k != 0 and all(Fraction(a) == k * Fraction(b) for a, b in zip(u, v))


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(line[1])
