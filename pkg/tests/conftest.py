import pytest

from utils.braids import BraidWord
from utils.laurent import LaurentPoly
from utils.orbits import TemplateSpec
from utils.theorem_checks import build_prime_catalog


@pytest.fixture
def lorenz():
    return TemplateSpec(0, 0)


@pytest.fixture
def trefoil_braid():
    return BraidWord(2, (1, 1, 1))


@pytest.fixture
def trefoil_alexander():
    return LaurentPoly.from_dict({-1: 1, 0: -1, 1: 1})


@pytest.fixture
def trefoil_jones():
    return LaurentPoly.from_dict({1: 1, 3: 1, 4: -1})


@pytest.fixture(scope='session')
def small_catalog():
    return build_prime_catalog(5)
