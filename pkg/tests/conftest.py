import os

import pytest

from specht_lab import resolution

FULL = os.environ.get("SPECHT_LAB_FULL") == "1"


@pytest.fixture(scope="session", autouse=True)
def _kernel_cache(tmp_path_factory):
    # reuse a caller-provided cache; otherwise isolate from the working tree
    if not os.environ.get("SPECHT_LAB_CACHE"):
        resolution.set_cache_dir(tmp_path_factory.mktemp("specht-cache"))
    yield


def pytest_configure(config):
    config.addinivalue_line("markers", "full: slow runs (n = 5 oracle, n = 6), enabled with SPECHT_LAB_FULL=1")


def pytest_collection_modifyitems(config, items):
    if FULL:
        return
    skip = pytest.mark.skip(reason="set SPECHT_LAB_FULL=1 for the slow n = 5 and n = 6 runs")
    for item in items:
        if "full" in item.keywords:
            item.add_marker(skip)
