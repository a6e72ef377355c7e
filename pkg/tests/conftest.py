import pytest
from hypothesis import settings

from src.chow_ring import generator, make_ambient

# first calls fill the Todd and reference-data caches
settings.register_profile("engine", deadline=None)
settings.load_profile("engine")


@pytest.fixture
def p1p2():
    ambient = make_ambient([1, 2])
    return ambient, generator(ambient, 0), generator(ambient, 1)


@pytest.fixture
def p1p3():
    ambient = make_ambient([1, 3])
    return ambient, generator(ambient, 0), generator(ambient, 1)
