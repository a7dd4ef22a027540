import random

import numpy as np
import pytest

from diu.vectors import DEFAULT_VECTORS


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running fuzz suites (deselect with -m 'not slow')")


@pytest.fixture
def rng():
    return random.Random(0x5EED)


@pytest.fixture
def np_rng():
    return np.random.default_rng(0x5EED)


@pytest.fixture
def vectors_path():
    return DEFAULT_VECTORS


def random_words(rng, n):
    return tuple(rng.getrandbits(32) for _ in range(n))


def random_block(rng):
    return rng.getrandbits(512).to_bytes(64, "big")


def random_message(rng, max_len):
    n = rng.randint(0, max_len)
    return rng.getrandbits(8 * n).to_bytes(n, "big") if n else b""
