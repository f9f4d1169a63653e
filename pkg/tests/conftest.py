import pytest

from prm_hull.core.gf import field_new
from prm_hull.services.logging_service import HullLogger


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run the full-range oracle sweeps"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-range oracle sweeps, enabled with --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session", autouse=True)
def _loggers():
    # Handlers bind the session stderr, not a per-test capture
    for name in ("prm_hull", "verify", "tests"):
        HullLogger(name)


@pytest.fixture
def logger():
    return HullLogger("tests")


@pytest.fixture
def F4():
    return field_new(4)


@pytest.fixture
def F5():
    return field_new(5)
