import random

import pytest

from src.algebra.sampling import random_group_like, random_lie_polynomial, random_polynomial
from src.algebra.words import Alphabet


@pytest.fixture
def rng():
    return random.Random(20261017)


@pytest.fixture
def x1():
    """Alfabeto {x0, x1}."""
    return Alphabet(1)


@pytest.fixture
def x2():
    return Alphabet(2)


@pytest.fixture
def make_polynomial(rng):
    def factory(alphabet, degree=3, letters=None, terms=6, constant=True):
        return random_polynomial(rng, alphabet, degree, letters=letters, terms=terms, constant=constant)
    return factory


@pytest.fixture
def make_lie(rng):
    def factory(alphabet, depth=3, brackets=3):
        return random_lie_polynomial(rng, alphabet, depth, brackets)
    return factory


@pytest.fixture
def make_group_like(rng):
    def factory(alphabet, n=4):
        return random_group_like(rng, alphabet, n)
    return factory
