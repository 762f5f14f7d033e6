import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pachner import core, seeds  # noqa: E402
from pachner.explorer import generate_tn  # noqa: E402
from pachner.shapes import ShapeAssignment, propagate_23  # noqa: E402


@pytest.fixture
def t2():
    return seeds.fig8()


@pytest.fixture
def sister():
    return seeds.fig8_sister()


@pytest.fixture
def regular2():
    return ShapeAssignment(seeds.regular_shapes(seeds.fig8()))


@pytest.fixture
def t3():
    return generate_tn(3)


@pytest.fixture
def sister3():
    tri = seeds.fig8_sister()
    shapes = ShapeAssignment(seeds.regular_shapes(tri))
    site = core.enumerate_23_sites(tri)[0]
    return core.pachner_23(tri, site), propagate_23(shapes, site)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported by the verdict fixture")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
