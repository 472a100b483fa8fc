import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from tournament_solutions import Tournament

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES = []


def tournaments(min_n=1, max_n=8):
    """Hypothesis strategy for labeled tournaments via their upper-triangle code."""

    def build(n):
        m = n * (n - 1) // 2
        return st.integers(0, (1 << m) - 1 if m else 0).map(lambda c: Tournament.from_code(n, c))

    return st.integers(min_n, max_n).flatmap(build)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
