import numpy as np
import pytest

from functions.config.calculus_config import DEFAULT_CONFIG, EXHAUSTIVE_CONFIG, ConfigurationManager
from functions.core.groups import symmetric_group
from functions.core.gsets import GSet, empty_gset, regular_gset, trivial_gset
from functions.core.symseq import SymSeq
from functions.infrastructure.caching import clear_cache


@pytest.fixture(autouse=True)
def default_config():
    ConfigurationManager.activate(DEFAULT_CONFIG)
    yield
    ConfigurationManager.activate(DEFAULT_CONFIG)


@pytest.fixture
def exhaustive():
    """Law checks enumerate every instance, like the oracle does"""
    return ConfigurationManager.activate(EXHAUSTIVE_CONFIG)


@pytest.fixture
def fresh_cache():
    clear_cache()
    yield
    clear_cache()


def trial_rng(trial: int) -> np.random.Generator:
    """A generator of its own for each parametrized trial"""
    return np.random.default_rng(1729 + trial)


def sign_gset(n: int) -> GSet:
    """Two points swapped by the odd permutations"""
    group = symmetric_group(n)
    parity = [sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]) % 2 for sigma in group.elements]
    return GSet(n, np.array([[x ^ parity[g] for g in range(group.order)] for x in range(2)], dtype=np.int64))


def small_gset(rng, n: int) -> GSet:
    """A random S_n-set with at most two elements"""
    choices = [empty_gset(n), trivial_gset(n, 1), trivial_gset(n, 2)]
    if n >= 2:
        choices.append(sign_gset(n))
    if n == 2:
        choices.append(regular_gset(2))
    return choices[int(rng.integers(len(choices)))]


def random_symseq(rng, max_arity: int, nullary: bool = True, name: str = "R") -> SymSeq:
    carriers = [small_gset(rng, n) if nullary or n > 0 else empty_gset(0) for n in range(max_arity + 1)]
    return SymSeq(max_arity, tuple(carriers), name=name)
