import pytest
from hypothesis import HealthCheck, settings

from jordanorder.jordan import Scalar, Spin, Sym
from jordanorder.rings import Q, rational

settings.register_profile("repo", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def r(x):
    return rational(x)


@pytest.fixture
def S():
    return Scalar(Q)


@pytest.fixture
def S2():
    return Sym(2)


@pytest.fixture
def Sp2():
    return Spin(2)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS, _line
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for i in sorted(RESULTS):
            terminalreporter.write_line(_line(i, *RESULTS[i]))
