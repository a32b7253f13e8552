"""
Alfabetos e palavras do monoide livre X* = {x_0, ..., x_m}*.

Palavras são tuplas imutáveis de índices de letras; a palavra vazia é ``()``.
A ordem canônica é comprimento-lexicográfica com x_0 < x_1 < ... < x_m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from src.core.exceptions import AlphabetMismatchError, ParseError

Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Alphabet:
    """Alfabeto {x_0, ..., x_m}; x_0 é a letra de deriva."""

    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise AlphabetMismatchError("alphabet needs m >= 1", context={"m": self.m})

    @property
    def size(self) -> int:
        return self.m + 1

    @property
    def letters(self) -> range:
        return range(self.m + 1)

    def check_letter(self, letter: int) -> int:
        if not isinstance(letter, int) or not 0 <= letter <= self.m:
            raise AlphabetMismatchError(
                f"letter x{letter} is not in alphabet x0..x{self.m}",
                context={"letter": letter, "m": self.m},
            )
        return letter

    def check_word(self, word: Iterable[int]) -> Word:
        return tuple(self.check_letter(letter) for letter in word)

    def __str__(self) -> str:
        return "{" + ",".join(f"x{i}" for i in self.letters) + "}"


def tokenize_word(text: str) -> Word:
    """Índices das letras de 'x0 x1 ...' sem checar o alfabeto."""
    letters = []
    for token in (text or "").split():
        if len(token) < 2 or token[0] != "x" or not token[1:].isdigit():
            raise ParseError(f"unknown token '{token}'", context={"text": text})
        letters.append(int(token[1:]))
    return tuple(letters)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Converte 'x0 x1 ...' em palavra; string vazia é a palavra vazia."""
    word = tokenize_word(text)
    for index in word:
        if index > alphabet.m:
            raise ParseError(
                f"letter 'x{index}' outside alphabet x0..x{alphabet.m}",
                context={"text": text},
            )
    return word


def format_word(word: Word, empty: str = "") -> str:
    """Forma textual 'x0 x1'; ``empty`` representa a palavra vazia."""
    if not word:
        return empty
    return " ".join(f"x{i}" for i in word)


def word_sort_key(word: Word) -> Tuple[int, Word]:
    return (len(word), word)


def iter_words(letters: Iterable[int], max_length: int) -> Iterator[Word]:
    """Palavras sobre ``letters`` até ``max_length`` em ordem comprimento-lex."""
    ordered = sorted(set(letters))
    for length in range(max_length + 1):
        for word in itertools.product(ordered, repeat=length):
            yield word


def enumerate_words(alphabet: Alphabet, max_length: int) -> List[Word]:
    if max_length < 0:
        return []
    return list(iter_words(alphabet.letters, max_length))


__all__ = [
    "Word", "EMPTY_WORD", "Alphabet",
    "tokenize_word", "parse_word", "format_word", "word_sort_key", "iter_words", "enumerate_words",
]
