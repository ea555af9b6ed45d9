import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from pcfcolor.services import build_graph
from tests.factories import complete, cycle, lists_of, star

hypothesis_settings.register_profile(
    "pcf", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
hypothesis_settings.load_profile("pcf")


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def k13():
    return star(3)


@pytest.fixture
def p3():
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def c5_uniform_lists():
    return lists_of(*([[1, 2, 3, 4]] * 5))
