"""
Polinômios de Lie, exponencial/logaritmo truncados e séries de Chen.

Elementos de Lie e elementos de grupo são séries comuns validadas por
critério (Ree / multiplicatividade no shuffle), não árvores de colchetes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

from src.algebra.series import (
    Series,
    add,
    concat,
    scale,
    shuffle_words,
    truncate,
)
from src.algebra.words import Alphabet, Word, iter_words
from src.core.core import Number, to_coefficient
from src.core.exceptions import EngineError


@dataclass(frozen=True)
class GroupElement:
    """z ∈ G(X): série com ⟨z,∅⟩ = 1, group-like até o corte."""

    series: Series

    def __post_init__(self) -> None:
        if self.series.constant_term != 1:
            raise EngineError(
                "group element needs constant term 1",
                context={"constant": self.series.constant_term},
            )

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "GroupElement":
        return cls(Series.one(alphabet))

    @property
    def is_identity(self) -> bool:
        return self.series == Series.one(self.series.alphabet)

    @property
    def depth(self) -> int:
        return max(self.series.degree, 0)


@dataclass(frozen=True)
class LieElement:
    """p ∈ L̂(X): série com termo constante nulo, primitiva até o corte."""

    series: Series

    def __post_init__(self) -> None:
        if self.series.constant_term != 0:
            raise EngineError(
                "Lie element needs zero constant term",
                context={"constant": self.series.constant_term},
            )


def bracket(p: Series, q: Series) -> Series:
    """[p, q] = pq - qp"""
    return add(concat(p, q), scale(-1, concat(q, p)))


def _power_sum(base: Series, n: int, weights: Sequence[Fraction]) -> Series:
    """Σ_{k=0..n} weights[k] base^k com corte n."""
    alphabet = base.alphabet
    base = truncate(base, n)
    power = Series.one(alphabet, n)
    total = scale(weights[0], power)
    for k in range(1, n + 1):
        power = concat(power, base)
        if power.is_zero:
            break
        total = add(total, scale(weights[k], power))
    return total


def exp_truncated(p: Series, n: int) -> GroupElement:
    """Σ_{k=0..n} p^k / k! truncada em n."""
    if p.constant_term != 0:
        raise EngineError("exp needs a series with zero constant term",
                          context={"constant": p.constant_term})
    weights = [Fraction(1, math.factorial(k)) for k in range(n + 1)]
    return GroupElement(_power_sum(p, n, weights))


def log_truncated(z: Series, n: int) -> Series:
    """Σ_{k=1..n} (-1)^{k+1} (z-1)^k / k truncada em n."""
    if z.constant_term != 1:
        raise EngineError("log needs a series with constant term 1",
                          context={"constant": z.constant_term})
    shifted = add(z, scale(-1, Series.one(z.alphabet)))
    weights = [Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, n + 1)]
    return _power_sum(shifted, n, weights)


# =================================================================
# CRITÉRIOS DE REE E DE MULTIPLICATIVIDADE
# =================================================================

def _check_depth(c: Series, n: int) -> None:
    if c.cap is not None and c.cap < n:
        raise EngineError("series cap below the requested check depth",
                          context={"cap": c.cap, "n": n})


def _word_pairs(letters, n: int) -> Iterator[Tuple[Word, Word]]:
    """Pares (η, ν) não vazios com |η| + |ν| <= n e η <= ν (shuffle comutativo)."""
    words = [w for w in iter_words(letters, n - 1) if w]
    for a, eta in enumerate(words):
        for nu in words[a:]:
            if len(eta) + len(nu) <= n:
                yield eta, nu


def _pair_eval(eta: Word, nu: Word, c: Series) -> Fraction:
    support = c.support
    total = Fraction(0)
    for w, k in shuffle_words(eta, nu):
        value = support.get(w)
        if value is not None:
            total += k * value
    return total


def is_primitive_ree(p: Series, n: int) -> bool:
    """⟨η⧢ν, p⟩ = 0 para todos η, ν não vazios com |η|+|ν| <= n."""
    _check_depth(p, n)
    letters = p.letters_used()
    return all(_pair_eval(eta, nu, p) == 0 for eta, nu in _word_pairs(letters, n))


def group_like_defect(z: Series, n: int) -> float:
    """max |⟨η⧢ν,z⟩ - ⟨η,z⟩⟨ν,z⟩| (inclui |⟨z,∅⟩ - 1|)."""
    _check_depth(z, n)
    support = z.support
    worst = abs(float(z.constant_term) - 1.0)
    for eta, nu in _word_pairs(z.letters_used(), n):
        lhs = _pair_eval(eta, nu, z)
        rhs = support.get(eta, Fraction(0)) * support.get(nu, Fraction(0))
        worst = max(worst, abs(float(lhs - rhs)))
    return worst


def is_group_like(z: Series, n: int, tol: Optional[float] = None) -> bool:
    """⟨z,∅⟩ = 1 e ⟨η⧢ν,z⟩ = ⟨η,z⟩⟨ν,z⟩ até o grau n (exato, ou com tolerância)."""
    if tol is not None:
        return group_like_defect(z, n) <= tol
    _check_depth(z, n)
    if z.constant_term != 1:
        return False
    support = z.support
    for eta, nu in _word_pairs(z.letters_used(), n):
        rhs = support.get(eta, Fraction(0)) * support.get(nu, Fraction(0))
        if _pair_eval(eta, nu, z) != rhs:
            return False
    return True


# =================================================================
# SÉRIES DE CHEN PARA ENTRADAS CONSTANTES
# =================================================================

def chen_series_constant(alpha: Sequence[Number], t: Number, n: int) -> GroupElement:
    """exp(t Σ α_i x_i) truncada: ⟨P, x_{i1}..x_{ik}⟩ = α_{i1}..α_{ik} t^k / k!."""
    if len(alpha) < 2:
        raise EngineError("chen series needs alpha_0 and at least one input")
    values = [to_coefficient(a) for a in alpha]
    if values[0] != 1:
        raise EngineError("chen series needs alpha_0 = 1", context={"alpha_0": values[0]})
    t = to_coefficient(t)
    alphabet = Alphabet(len(values) - 1)
    data = {}
    for word in iter_words(alphabet.letters, n):
        coeff = t ** len(word) / math.factorial(len(word))
        for i in word:
            coeff *= values[i]
        data[word] = coeff
    return GroupElement(Series(alphabet, data, n))


__all__ = [
    "GroupElement", "LieElement",
    "bracket", "exp_truncated", "log_truncated",
    "is_primitive_ree", "is_group_like", "group_like_defect",
    "chen_series_constant",
]
