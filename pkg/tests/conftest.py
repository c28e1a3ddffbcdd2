import numpy as np
import pytest

from algebra import PrimeField, RationalField
from catalog import catalog_for
from settings import RunConfig


@pytest.fixture
def qq():
    return RationalField()


@pytest.fixture
def gf():
    return PrimeField(32003)


@pytest.fixture
def nonic():
    return catalog_for(9)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def config():
    """Campaign settings for order-9 forms that never touch the disk cache."""
    return RunConfig(n=9, use_cache=False)
