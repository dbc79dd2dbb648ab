import numpy as np
import pytest

from lciword.rng import stream
from lciword.words import Word


@pytest.fixture
def rng():
    return stream(20240915, 0)


def random_word(rng, m, n, probs=None):
    if probs is None:
        letters = rng.integers(1, m + 1, n)
    else:
        letters = rng.choice(np.arange(1, m + 1), size=n, p=probs)
    return Word(letters, m)
