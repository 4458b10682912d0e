import numpy as np
import pytest

from commgrowth.arith import divisor_count_sieve, omega_sieve

DESK_LIMIT = 10 ** 6


@pytest.fixture(scope="session")
def omega_upto_million():
    return omega_sieve(DESK_LIMIT)


@pytest.fixture(scope="session")
def rank1_prefix_upto_million(omega_upto_million):
    c = np.left_shift(np.int64(1), omega_upto_million[1:].astype(np.int64))
    return np.cumsum(c)


@pytest.fixture(scope="session")
def divisor_prefix_upto_million():
    return np.cumsum(divisor_count_sieve(DESK_LIMIT)[1:], dtype=np.int64)
