import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ringlab.library import catalog_extensions, load_catalog  # noqa: E402


@pytest.fixture(scope="session")
def extensions():
    return catalog_extensions()


@pytest.fixture(scope="session")
def catalog():
    def get(entry, name="E"):
        return load_catalog(entry)[1][name]
    return get


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
