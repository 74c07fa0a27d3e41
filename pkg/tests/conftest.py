import random
from fractions import Fraction

import pytest


@pytest.fixture
def rng():
    return random.Random(20240611)


def rand_rat(rng, lo, hi, den=50):
    """A rational strictly between lo and hi with denominator <= den."""
    while True:
        d = rng.randint(1, den)
        x = Fraction(rng.randint(int(lo * d) - 1, int(hi * d) + 1), d)
        if lo < x < hi:
            return x


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[n])
