"""
Geradores aleatórios reprodutíveis (``random.Random`` semeado) de polinômios,
polinômios de Lie e elementos group-like, usados pelo selftest e pelos testes.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, Optional, Sequence

from src.algebra.lie import GroupElement, bracket, exp_truncated
from src.algebra.series import Series, add, scale
from src.algebra.words import Alphabet, Word


def random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    """Racional não nulo p/q com |p| <= bound e 1 <= q <= 3."""
    p = 0
    while p == 0:
        p = rng.randint(-bound, bound)
    return Fraction(p, rng.randint(1, 3))


def random_polynomial(rng: random.Random, alphabet: Alphabet, degree: int,
                      letters: Optional[Sequence[int]] = None, terms: int = 6,
                      constant: bool = True) -> Series:
    """Polinômio exato com até ``terms`` palavras de comprimento <= degree."""
    pool = list(letters) if letters is not None else list(alphabet.letters)
    data: Dict[Word, Fraction] = {}
    if constant:
        data[()] = random_rational(rng)
    for _ in range(terms):
        length = rng.randint(1, degree) if degree > 0 else 0
        word = tuple(rng.choice(pool) for _ in range(length))
        data[word] = data.get(word, Fraction(0)) + random_rational(rng)
    return Series(alphabet, data)


def random_lie_polynomial(rng: random.Random, alphabet: Alphabet, depth: int = 3,
                          brackets: int = 3) -> Series:
    """Combinação aleatória de letras e colchetes aninhados [x_a, [x_b, ...]]."""
    total = Series.zero(alphabet)
    for _ in range(brackets):
        size = rng.randint(1, depth)
        element = Series.letter(alphabet, rng.choice(list(alphabet.letters)))
        for _ in range(size - 1):
            element = bracket(Series.letter(alphabet, rng.choice(list(alphabet.letters))), element)
        total = add(total, scale(random_rational(rng, 3), element))
    if total.is_zero:
        return Series.letter(alphabet, 0)
    return total


def random_group_like(rng: random.Random, alphabet: Alphabet, n: int) -> GroupElement:
    """exp de um polinômio de Lie aleatório, truncada em n."""
    return exp_truncated(random_lie_polynomial(rng, alphabet), n)


__all__ = ["random_rational", "random_polynomial", "random_lie_polynomial", "random_group_like"]
