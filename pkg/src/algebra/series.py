"""
Séries formais não comutativas truncadas com coeficientes racionais exatos.

Uma :class:`Series` é um mapa palavra -> Fraction com suporte finito e um
grau de corte ``cap``. ``cap=None`` marca um polinômio exato (nenhuma palavra
descartada); um ``cap`` inteiro N marca uma série conhecida até o grau N.
Operações binárias usam como corte o mínimo dos cortes finitos dos operandos.
Coeficientes nulos nunca são armazenados.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from src.algebra.words import EMPTY_WORD, Alphabet, Word, format_word, word_sort_key
from src.core.core import Number, format_coefficient, to_coefficient
from src.core.exceptions import AlphabetMismatchError, EngineError

Cap = Optional[int]


def combine_caps(*caps: Cap) -> Cap:
    """Menor corte finito (None quando todos são polinômios)."""
    finite = [cap for cap in caps if cap is not None]
    return min(finite) if finite else None


def _fits(word: Word, cap: Cap) -> bool:
    return cap is None or len(word) <= cap


class Series:
    """Série truncada sobre um :class:`Alphabet` (imutável)."""

    __slots__ = ("alphabet", "cap", "_support")

    def __init__(
        self,
        alphabet: Alphabet,
        support: Union[Mapping[Word, Number], Iterable[Tuple[Word, Number]], None] = None,
        cap: Cap = None,
    ) -> None:
        if cap is not None and cap < 0:
            raise EngineError("degree cap must be >= 0", context={"cap": cap})
        items = support.items() if isinstance(support, Mapping) else (support or ())
        data: Dict[Word, Fraction] = {}
        for word, value in items:
            word = alphabet.check_word(word)
            if not _fits(word, cap):
                continue
            total = data.get(word, Fraction(0)) + to_coefficient(value)
            if total:
                data[word] = total
            else:
                data.pop(word, None)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "_support", data)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # ------------------------------------------------------------------ #
    # Construtores
    # ------------------------------------------------------------------ #

    @classmethod
    def _trusted(cls, alphabet: Alphabet, data: Dict[Word, Fraction], cap: Cap) -> "Series":
        """Construção sem revalidação; ``data`` já limpo e truncado."""
        obj = cls.__new__(cls)
        object.__setattr__(obj, "alphabet", alphabet)
        object.__setattr__(obj, "cap", cap)
        object.__setattr__(obj, "_support", {w: v for w, v in data.items() if v and _fits(w, cap)})
        return obj

    @classmethod
    def zero(cls, alphabet: Alphabet, cap: Cap = None) -> "Series":
        return cls._trusted(alphabet, {}, cap)

    @classmethod
    def one(cls, alphabet: Alphabet, cap: Cap = None) -> "Series":
        return cls._trusted(alphabet, {EMPTY_WORD: Fraction(1)}, cap)

    @classmethod
    def word(cls, alphabet: Alphabet, word: Iterable[int], coeff: Number = 1, cap: Cap = None) -> "Series":
        return cls(alphabet, [(tuple(word), coeff)], cap)

    @classmethod
    def letter(cls, alphabet: Alphabet, index: int, coeff: Number = 1, cap: Cap = None) -> "Series":
        return cls.word(alphabet, (index,), coeff, cap)

    # ------------------------------------------------------------------ #
    # Consulta
    # ------------------------------------------------------------------ #

    @property
    def support(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._support)

    @property
    def is_polynomial(self) -> bool:
        return self.cap is None

    @property
    def is_zero(self) -> bool:
        return not self._support

    @property
    def degree(self) -> int:
        """Comprimento da maior palavra no suporte (-1 para a série nula)."""
        return max((len(w) for w in self._support), default=-1)

    @property
    def constant_term(self) -> Fraction:
        return self._support.get(EMPTY_WORD, Fraction(0))

    def letters_used(self) -> set:
        return {letter for word in self._support for letter in word}

    def coefficient(self, word: Iterable[int]) -> Fraction:
        word = self.alphabet.check_word(word)
        if not _fits(word, self.cap):
            raise EngineError(
                "coefficient requested beyond the degree cap",
                context={"word": format_word(word, "∅"), "cap": self.cap},
            )
        return self._support.get(word, Fraction(0))

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        """Termos em ordem comprimento-lexicográfica."""
        for word in sorted(self._support, key=word_sort_key):
            yield word, self._support[word]

    def as_polynomial(self) -> "Series":
        return Series._trusted(self.alphabet, self._support, None)

    def with_cap(self, cap: Cap) -> "Series":
        return Series._trusted(self.alphabet, self._support, cap)

    # ------------------------------------------------------------------ #
    # Aritmética linear
    # ------------------------------------------------------------------ #

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return add(self, scale(-1, other))

    def __neg__(self) -> "Series":
        return scale(-1, self)

    def __mul__(self, scalar: Number) -> "Series":
        if isinstance(scalar, Series):
            return NotImplemented
        return scale(scalar, self)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.alphabet == other.alphabet and self._support == other._support

    def __hash__(self) -> int:
        return hash((self.alphabet, frozenset(self._support.items())))

    def __repr__(self) -> str:
        return f"Series({format_series(self)}, m={self.alphabet.m}, cap={self.cap})"

    def __str__(self) -> str:
        return format_series(self)


# =================================================================
# OPERAÇÕES
# =================================================================

def _require_same_alphabet(c: Series, d: Series) -> None:
    if c.alphabet != d.alphabet:
        raise AlphabetMismatchError(
            "series over different alphabets",
            context={"left": str(c.alphabet), "right": str(d.alphabet)},
        )


def add(c: Series, d: Series) -> Series:
    _require_same_alphabet(c, d)
    cap = combine_caps(c.cap, d.cap)
    data = dict(c._support)
    for word, value in d._support.items():
        data[word] = data.get(word, Fraction(0)) + value
    return Series._trusted(c.alphabet, data, cap)


def scale(a: Number, c: Series) -> Series:
    a = to_coefficient(a)
    if not a:
        return Series.zero(c.alphabet, c.cap)
    return Series._trusted(c.alphabet, {w: a * v for w, v in c._support.items()}, c.cap)


def coefficient_of(c: Series, word: Iterable[int]) -> Fraction:
    return c.coefficient(word)


def truncate(c: Series, n: int) -> Series:
    if n < 0:
        raise EngineError("truncation degree must be >= 0", context={"n": n})
    return Series._trusted(c.alphabet, c._support, combine_caps(c.cap, n))


def concat(c: Series, d: Series) -> Series:
    """Produto de concatenação (Cauchy)."""
    _require_same_alphabet(c, d)
    cap = combine_caps(c.cap, d.cap)
    data: Dict[Word, Fraction] = {}
    for u, a in c._support.items():
        for v, b in d._support.items():
            if cap is not None and len(u) + len(v) > cap:
                continue
            w = u + v
            data[w] = data.get(w, Fraction(0)) + a * b
    return Series._trusted(c.alphabet, data, cap)


@lru_cache(maxsize=1 << 16)
def shuffle_words(u: Word, v: Word) -> Tuple[Tuple[Word, int], ...]:
    """Produto shuffle de duas palavras como tupla (palavra, multiplicidade)."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: Dict[Word, int] = {}
    for w, k in shuffle_words(u[1:], v):
        key = (u[0],) + w
        out[key] = out.get(key, 0) + k
    for w, k in shuffle_words(u, v[1:]):
        key = (v[0],) + w
        out[key] = out.get(key, 0) + k
    return tuple(out.items())


def shuffle(c: Series, d: Series) -> Series:
    _require_same_alphabet(c, d)
    cap = combine_caps(c.cap, d.cap)
    data: Dict[Word, Fraction] = {}
    for u, a in c._support.items():
        for v, b in d._support.items():
            if cap is not None and len(u) + len(v) > cap:
                continue
            ab = a * b
            for w, k in shuffle_words(u, v):
                data[w] = data.get(w, Fraction(0)) + k * ab
    return Series._trusted(c.alphabet, data, cap)


def _shifted_cap(cap: Cap, by: int) -> Cap:
    return None if cap is None else max(cap - by, 0)


def left_shift_letter(i: int, c: Series) -> Series:
    """x_i^{-1}: remove um x_i inicial; palavras com outra cabeça somem."""
    c.alphabet.check_letter(i)
    data = {w[1:]: v for w, v in c._support.items() if w and w[0] == i}
    return Series._trusted(c.alphabet, data, _shifted_cap(c.cap, 1))


def left_shift_word(word: Word, c: Series) -> Series:
    """η^{-1} com (x_i η')^{-1} = η'^{-1} x_i^{-1}: retira o prefixo η."""
    word = c.alphabet.check_word(word)
    k = len(word)
    data = {w[k:]: v for w, v in c._support.items() if w[:k] == word}
    return Series._trusted(c.alphabet, data, _shifted_cap(c.cap, k))


def left_shift_poly(p: Series, c: Series) -> Series:
    """p^{-1} = Σ ⟨p,η⟩ η^{-1} para um polinômio p."""
    _require_same_alphabet(p, c)
    if not p.is_polynomial:
        raise EngineError("left shift needs a polynomial (finite support, no cap)",
                          context={"cap": p.cap})
    cap = _shifted_cap(c.cap, max(p.degree, 0))
    data: Dict[Word, Fraction] = {}
    for eta, a in p._support.items():
        k = len(eta)
        for w, v in c._support.items():
            if w[:k] == eta:
                data[w[k:]] = data.get(w[k:], Fraction(0)) + a * v
    return Series._trusted(c.alphabet, data, cap)


def scalar_product(c: Series, d: Series) -> Fraction:
    """⟨c, d⟩ = Σ_η ⟨c,η⟩⟨d,η⟩ sobre o suporte comum."""
    _require_same_alphabet(c, d)
    small, large = (c, d) if len(c._support) <= len(d._support) else (d, c)
    total = Fraction(0)
    for word, value in small._support.items():
        other = large._support.get(word)
        if other is not None:
            total += value * other
    return total


def format_series(c: Series, empty: str = "1") -> str:
    """Texto canônico, ex.: 'x0x1x0x1 + 2*x0x0x1x1'."""
    if c.is_zero:
        return "0"
    parts = []
    for word, value in c.items():
        name = "".join(f"x{i}" for i in word) if word else empty
        if value == 1:
            term = name
        elif value == -1:
            term = f"-{name}"
        elif not word:
            term = format_coefficient(value)
        else:
            term = f"{format_coefficient(value)}*{name}"
        parts.append(term)
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


__all__ = [
    "Series", "Cap", "combine_caps",
    "add", "scale", "coefficient_of", "truncate",
    "concat", "shuffle", "shuffle_words",
    "left_shift_letter", "left_shift_word", "left_shift_poly",
    "scalar_product", "format_series",
]
