import cmath

import numpy as np
import pytest

from lazkit.seqcore import PolyphaseSequence

ACCEPTANCE_LINES = []


def brute_periodic_af(a, b, tau, nu):
    """Plain-Python periodic ambiguity sum, independent of the package."""
    n = len(a)
    return sum(a[t] * b[(t + tau) % n].conjugate() * cmath.exp(2j * cmath.pi * nu * t / n)
               for t in range(n))


def brute_aperiodic_af(a, b, tau, nu):
    n = len(a)
    if abs(tau) >= n:
        return 0j
    ts = range(0, n - tau) if tau >= 0 else range(-tau, n)
    return sum(a[t] * b[t + tau].conjugate() * cmath.exp(2j * cmath.pi * nu * t / n) for t in ts)


def random_unimodular(rng, n):
    return PolyphaseSequence(np.exp(2j * np.pi * rng.random(n)))


@pytest.fixture
def rng():
    return np.random.default_rng(20221)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
