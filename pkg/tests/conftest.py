import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from qwigner.catalog import DEFAULT_SEED

settings.register_profile(
    "qwigner", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("qwigner")


@pytest.fixture
def rng():
    return np.random.default_rng(DEFAULT_SEED)


def seeds(count, base=DEFAULT_SEED):
    return [base + k for k in range(count)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
