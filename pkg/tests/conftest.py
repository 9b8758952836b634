import pytest
from hypothesis import HealthCheck, settings

from leibniz_levi.fixtures import corpus
from leibniz_levi.levi import levi_subalgebra

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def fixtures():
    return corpus()


@pytest.fixture(scope="session")
def ex39(fixtures):
    return fixtures["example_3_9"]


@pytest.fixture(scope="session")
def l201(fixtures):
    return fixtures["L201"]


@pytest.fixture(scope="session")
def hemi(fixtures):
    return fixtures["hemi_sl2_adjoint"]


@pytest.fixture(scope="session")
def levis(fixtures):
    return {name: levi_subalgebra(A) for name, A in fixtures.items()}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
