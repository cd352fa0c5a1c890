import pytest

from superlrc.designs import affine_plane_lines
from superlrc.lrc import LrcParams, construct, construct_from_family, identical_plan, sunflower_plan


@pytest.fixture(scope="session")
def code_q7():
    p = LrcParams(q=7, r=3, delta=3, v=1, w=5)
    return construct(p, identical_plan(p))


@pytest.fixture(scope="session")
def code_q13():
    p = LrcParams(q=13, r=2, delta=2, v=1, w=5)
    return construct(p, sunflower_plan(p))


@pytest.fixture(scope="session")
def code_q29():
    return construct_from_family(LrcParams(q=29, r=4, delta=2, v=1, w=30), affine_plane_lines(5))


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
