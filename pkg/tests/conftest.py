import pytest

from cwlattice.data import sample_code, sample_pool
from cwlattice.gf import PrimeField


@pytest.fixture(scope="session")
def f2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def pool744():
    return sample_pool()


@pytest.fixture(scope="session")
def code744():
    return sample_code()
