from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from skorokhod_sset.realization import StepFunction

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

Q = Fraction


@pytest.fixture
def jumps():
    """Single jumps at 1/3 and 1/2 into a two-element codomain."""
    return StepFunction(2, (Q(1, 3),)), StepFunction(2, (Q(1, 2),))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
