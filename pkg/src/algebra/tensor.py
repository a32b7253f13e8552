"""
Funcionais tensoriais sobre G^n(X).

Um :class:`TensorFunctional` é uma soma finita de termos
``escalar · c_1 ⊗ ... ⊗ c_n`` avaliada em n-uplas group-like por
``z -> Σ escalar · Π ⟨c_l, z_l⟩``. Produtos no mesmo slot são dobrados em uma
única série via shuffle, o que só vale em argumentos group-like.

A forma normal expande cada termo em monômios (uma palavra por slot) e soma
os escalares de monômios iguais; dois funcionais são iguais quando suas formas
normais coincidem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from src.algebra.lie import GroupElement
from src.algebra.series import Series, shuffle_words
from src.algebra.words import EMPTY_WORD, Alphabet, Word, word_sort_key
from src.core.core import Number, format_coefficient, to_coefficient
from src.core.exceptions import AlphabetMismatchError, DimensionMismatchError

Monomial = Tuple[Word, ...]
MonomialMap = Dict[Monomial, Fraction]


@dataclass(frozen=True)
class TensorTerm:
    """escalar · c_1 ⊗ ... ⊗ c_n"""

    slots: Tuple[Series, ...]
    scalar: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if not self.slots:
            raise DimensionMismatchError("tensor term needs at least one slot")
        alphabet = self.slots[0].alphabet
        if any(s.alphabet != alphabet for s in self.slots):
            raise AlphabetMismatchError("tensor slots over different alphabets")
        object.__setattr__(self, "scalar", to_coefficient(self.scalar))

    @property
    def n(self) -> int:
        return len(self.slots)

    @property
    def is_zero(self) -> bool:
        return not self.scalar or any(s.is_zero for s in self.slots)

    def monomials(self) -> MonomialMap:
        out: MonomialMap = {(): self.scalar}
        for slot in self.slots:
            grown: MonomialMap = {}
            for mono, a in out.items():
                for word, b in slot.support.items():
                    key = mono + (word,)
                    grown[key] = grown.get(key, Fraction(0)) + a * b
            out = grown
        return {k: v for k, v in out.items() if v}


def total_degree(mono: Monomial) -> int:
    return sum(len(w) for w in mono)


def shuffle_monomials(left: Monomial, right: Monomial) -> Iterator[Tuple[Monomial, int]]:
    """Produto shuffle slot a slot de dois monômios."""
    partial: Dict[Monomial, int] = {(): 1}
    for u, v in zip(left, right):
        grown: Dict[Monomial, int] = {}
        for mono, k in partial.items():
            for w, mult in shuffle_words(u, v):
                key = mono + (w,)
                grown[key] = grown.get(key, 0) + k * mult
        partial = grown
    return iter(partial.items())


def prune(monomials: Mapping[Monomial, Fraction], budget: Optional[int]) -> MonomialMap:
    """Descarta monômios de grau total > budget e coeficientes nulos."""
    return {
        mono: value
        for mono, value in monomials.items()
        if value and (budget is None or total_degree(mono) <= budget)
    }


class TensorFunctional:
    """Soma finita de :class:`TensorTerm` com n slots (imutável)."""

    __slots__ = ("alphabet", "n", "terms", "_monomials")

    def __init__(self, alphabet: Alphabet, n: int, terms: Iterable[TensorTerm] = ()) -> None:
        if n < 1:
            raise DimensionMismatchError("functional needs n >= 1", context={"n": n})
        kept = []
        for term in terms:
            if term.n != n:
                raise DimensionMismatchError(
                    "tensor term slot count differs from functional",
                    context={"expected": n, "got": term.n},
                )
            if term.slots[0].alphabet != alphabet:
                raise AlphabetMismatchError("tensor term over a different alphabet")
            if not term.is_zero:
                kept.append(term)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", tuple(kept))
        object.__setattr__(self, "_monomials", None)

    def __setattr__(self, name, value):
        raise AttributeError("TensorFunctional is immutable")

    # ------------------------------------------------------------------ #
    # Construtores
    # ------------------------------------------------------------------ #

    @classmethod
    def from_monomials(cls, alphabet: Alphabet, n: int, monomials: MonomialMap) -> "TensorFunctional":
        terms = [
            TensorTerm(tuple(Series.word(alphabet, w) for w in mono), value)
            for mono, value in sorted(monomials.items(), key=lambda kv: _monomial_key(kv[0]))
            if value
        ]
        functional = cls(alphabet, n, terms)
        object.__setattr__(functional, "_monomials", {m: v for m, v in monomials.items() if v})
        return functional

    @classmethod
    def zero(cls, alphabet: Alphabet, n: int) -> "TensorFunctional":
        return cls(alphabet, n, ())

    @classmethod
    def unit(cls, alphabet: Alphabet, n: int, scalar: Number = 1) -> "TensorFunctional":
        return cls(alphabet, n, [TensorTerm(tuple(Series.one(alphabet) for _ in range(n)), scalar)])

    # ------------------------------------------------------------------ #
    # Consulta
    # ------------------------------------------------------------------ #

    def monomials(self) -> Mapping[Monomial, Fraction]:
        """Forma normal monomial (somente leitura)."""
        if self._monomials is None:
            out: MonomialMap = {}
            for term in self.terms:
                for mono, value in term.monomials().items():
                    out[mono] = out.get(mono, Fraction(0)) + value
            object.__setattr__(self, "_monomials", {m: v for m, v in out.items() if v})
        return MappingProxyType(self._monomials)

    @property
    def is_zero(self) -> bool:
        return not self.monomials()

    @property
    def degree(self) -> int:
        return max((total_degree(m) for m in self.monomials()), default=-1)

    def __add__(self, other: "TensorFunctional") -> "TensorFunctional":
        _require_compatible(self, other)
        return TensorFunctional(self.alphabet, self.n, self.terms + other.terms)

    def scaled(self, a: Number) -> "TensorFunctional":
        a = to_coefficient(a)
        return TensorFunctional(
            self.alphabet, self.n, [TensorTerm(t.slots, a * t.scalar) for t in self.terms]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorFunctional):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.n == other.n
                and dict(self.monomials()) == dict(other.monomials()))

    def __hash__(self) -> int:
        return hash((self.alphabet, self.n, frozenset(self.monomials().items())))

    def __repr__(self) -> str:
        return f"TensorFunctional(n={self.n}, {format_functional(self)})"

    def __str__(self) -> str:
        return format_functional(self)


# =================================================================
# OPERAÇÕES
# =================================================================

def _monomial_key(mono: Monomial):
    return (total_degree(mono), tuple(word_sort_key(w) for w in mono))


def _require_compatible(a: TensorFunctional, b: TensorFunctional) -> None:
    if a.n != b.n:
        raise DimensionMismatchError("functionals with different slot counts",
                                     context={"left": a.n, "right": b.n})
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError("functionals over different alphabets")


def embed(c: Series, j: int, n: int) -> TensorFunctional:
    """1 ⊗ ... ⊗ c ⊗ ... ⊗ 1 com c no slot j (1-indexado)."""
    if not 1 <= j <= n:
        raise DimensionMismatchError("slot index out of range", context={"j": j, "n": n})
    slots = tuple(c if l == j else Series.one(c.alphabet, c.cap) for l in range(1, n + 1))
    return TensorFunctional(c.alphabet, n, [TensorTerm(slots)])


def normalize(functional: TensorFunctional) -> TensorFunctional:
    return TensorFunctional.from_monomials(functional.alphabet, functional.n, functional.monomials())


def shuffle_functionals(left: TensorFunctional, right: TensorFunctional) -> TensorFunctional:
    _require_compatible(left, right)
    out: MonomialMap = {}
    for m1, a in left.monomials().items():
        for m2, b in right.monomials().items():
            ab = a * b
            for mono, k in shuffle_monomials(m1, m2):
                out[mono] = out.get(mono, Fraction(0)) + k * ab
    return TensorFunctional.from_monomials(left.alphabet, left.n, out)


def evaluate_identity(functional: TensorFunctional) -> Fraction:
    """ĉ(1_n) = Σ escalar · Π ⟨c_l, ∅⟩"""
    empty = tuple(EMPTY_WORD for _ in range(functional.n))
    return functional.monomials().get(empty, Fraction(0))


def evaluate_grouplike(
    functional: TensorFunctional,
    z: Sequence[Union[GroupElement, Series]],
) -> Fraction:
    """ĉ(z_1, ..., z_n) = Σ escalar · Π ⟨c_l, z_l⟩"""
    if len(z) != functional.n:
        raise DimensionMismatchError("group tuple length differs from slot count",
                                     context={"expected": functional.n, "got": len(z)})
    supports = [(zl.series if isinstance(zl, GroupElement) else zl).support for zl in z]
    total = Fraction(0)
    for mono, value in functional.monomials().items():
        product = value
        for word, support in zip(mono, supports):
            product *= support.get(word, Fraction(0))
            if not product:
                break
        total += product
    return total


def format_functional(functional: TensorFunctional) -> str:
    """Texto canônico, ex.: '2*x1x1 ⊗ 1'."""
    monomials = functional.monomials()
    if not monomials:
        return "0"
    parts = []
    for mono in sorted(monomials, key=_monomial_key):
        value = monomials[mono]
        body = " ⊗ ".join("".join(f"x{i}" for i in w) if w else "1" for w in mono)
        if value == 1:
            parts.append(body)
        elif value == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{format_coefficient(value)}*{body}")
    return " + ".join(parts).replace("+ -", "- ")


__all__ = [
    "Monomial", "MonomialMap", "TensorTerm", "TensorFunctional",
    "total_degree", "shuffle_monomials", "prune",
    "embed", "normalize", "shuffle_functionals",
    "evaluate_identity", "evaluate_grouplike", "format_functional",
]
