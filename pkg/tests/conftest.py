"""
Pytest fixtures for palindromic density tests
"""
import numpy as np
import pytest

from domain import Multiset, SpaceParams

PINNED_SEED = 20240101

@pytest.fixture
def worked_example() -> SpaceParams:
    """Words of length 5 over the ten digits"""
    return SpaceParams(n=5, b=10)

@pytest.fixture
def small_space() -> SpaceParams:
    """X_3^4: 15 multisets, 6 palindromic"""
    return SpaceParams(n=4, b=3)

@pytest.fixture
def binary_odd_space() -> SpaceParams:
    """X_2^3: every multiset palindromic"""
    return SpaceParams(n=3, b=2)

@pytest.fixture
def palindromic_multiset() -> Multiset:
    """{1, 1, 2, 2, 3}, arranged as 12321"""
    return Multiset.from_symbols([1, 1, 2, 2, 3], b=4)

@pytest.fixture
def non_palindromic_multiset() -> Multiset:
    """{1, 1, 2, 3, 4}"""
    return Multiset.from_symbols([1, 1, 2, 3, 4], b=5)

@pytest.fixture
def rng() -> np.random.Generator:
    """Generator with the pinned seed"""
    return np.random.default_rng(PINNED_SEED)

@pytest.fixture
def small_grid():
    """All (n, b) with 2 <= n <= 8, 2 <= b <= 6"""
    return [SpaceParams(n=n, b=b) for n in range(2, 9) for b in range(2, 7)]
