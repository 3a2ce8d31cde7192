import pytest
from hypothesis import settings

from natdiff.cli.catalog import CATALOG, catalog_ring

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

_RINGS = {}


def ring(name):
    if name not in _RINGS:
        _RINGS[name] = catalog_ring(name)
    return _RINGS[name]


@pytest.fixture
def cusp():
    return ring("cusp")


@pytest.fixture
def circle():
    return ring("circle")


@pytest.fixture
def twisted():
    return ring("twisted_cubic")


@pytest.fixture
def double_cusp():
    return ring("double_cusp")


@pytest.fixture(params=sorted(CATALOG))
def catalog_variety(request):
    return request.param, ring(request.param)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
