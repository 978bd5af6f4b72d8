import numpy as np
import pytest

from relmap.scenes import build_scene


@pytest.fixture
def rng():
    return np.random.default_rng(20210412)


@pytest.fixture(scope="session")
def right_scene():
    return build_scene("right", 100)


@pytest.fixture(scope="session")
def close_scene():
    return build_scene("close", 100)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)
