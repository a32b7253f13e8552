"""
Motor de representações formais (μ, z_0, ĉ).

Campos de estado formais ``V_j(z) = Σ q · d̂(z)`` agem sobre funcionais
tensoriais pela derivada de Lie formal: para cada termo c_1 ⊗ ... ⊗ c_n, cada
slot j e cada par (q, d̂) do slot j,

    L_V ĉ  ∋  c_1 ⧢ f_1 ⊗ ... ⊗ (q^{-1} c_j) ⧢ f_j ⊗ ... ⊗ c_n ⧢ f_n

para cada termo f_1 ⊗ ... ⊗ f_n de d̂. O deslocamento q^{-1} age sobre c_j
ANTES do shuffle com f_j: com a ordem inversa (q^{-1}(c_j ⧢ f_j)) o termo de
realimentação de ⟨d, x_0⟩ no laço aditivo unitário ganharia um fator 2, o que
contradiz os coeficientes ⟨d,x_0⟩ = ⟨c,x_0⟩ + ⟨c,x_1⟩⟨c,∅⟩ e a cadeia
x_1⊗x_1 → 2x_1²⊗1 → 2x_1⊗1 da cascata x_1² ∘ x_1.

Coeficientes: para η lida da esquerda para a direita, a primeira letra indexa
a derivada aplicada primeiro (a mais interna); ⟨d, x_0²x_1²⟩ = L_{V_1}L_{V_1}L_{V_0}L_{V_0}ĉ(z_0).

Poda por grau: restando r aplicações e avaliação na identidade, monômios de
grau total > r nunca contribuem (cada passo retira ao menos uma letra e o
shuffle só acrescenta). Com deslocamentos de grau até q e estado inicial de
profundidade D o orçamento vira r·q + D.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.algebra.lie import GroupElement, is_primitive_ree
from src.algebra.series import Series
from src.algebra.tensor import (
    Monomial,
    MonomialMap,
    TensorFunctional,
    embed,
    evaluate_grouplike,
    evaluate_identity,
    prune,
    shuffle_monomials,
    total_degree,
)
from src.algebra.words import EMPTY_WORD, Alphabet, Word
from src.core.core import log_execution
from src.core.exceptions import AlphabetMismatchError, DimensionMismatchError, EngineError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldTerm:
    """Parcela q · d̂(z) de um campo: q polinômio de Lie, d̂ funcional de estado."""

    shift: Series
    coeff: TensorFunctional

    def __post_init__(self) -> None:
        shift = self.shift
        if not shift.is_polynomial:
            raise EngineError("field shift must be a polynomial", context={"cap": shift.cap})
        if shift.is_zero or shift.constant_term != 0:
            raise EngineError("field shift must be nonzero with zero constant term",
                              context={"shift": str(shift)})
        if shift.alphabet != self.coeff.alphabet:
            raise AlphabetMismatchError("field shift and coefficient over different alphabets")
        if not is_primitive_ree(shift, shift.degree):
            raise EngineError("field shift is not a Lie polynomial", context={"shift": str(shift)})

    @classmethod
    def letter(cls, alphabet: Alphabet, index: int, coeff: TensorFunctional) -> "FieldTerm":
        return cls(Series.letter(alphabet, index), coeff)

    @property
    def shift_degree(self) -> int:
        return self.shift.degree


@dataclass(frozen=True)
class StateField:
    """V(z) = (V_1(z) z_1, ..., V_n(z) z_n) com V_j(z) = Σ parcelas do slot j."""

    alphabet: Alphabet
    n: int
    slots: Tuple[Tuple[FieldTerm, ...], ...]

    def __post_init__(self) -> None:
        if len(self.slots) != self.n:
            raise DimensionMismatchError("state field slot count differs from n",
                                         context={"n": self.n, "slots": len(self.slots)})
        for terms in self.slots:
            for term in terms:
                if term.coeff.n != self.n:
                    raise DimensionMismatchError(
                        "field coefficient slot count differs from n",
                        context={"n": self.n, "coeff_n": term.coeff.n},
                    )
                if term.shift.alphabet != self.alphabet:
                    raise AlphabetMismatchError("field term over a different alphabet")

    @classmethod
    def build(cls, alphabet: Alphabet, n: int, terms: Mapping[int, Iterable[FieldTerm]]) -> "StateField":
        """``terms`` indexado por slot 1..n; slots ausentes ficam vazios."""
        for j in terms:
            if not 1 <= j <= n:
                raise DimensionMismatchError("field slot out of range", context={"slot": j, "n": n})
        return cls(alphabet, n, tuple(tuple(terms.get(j, ())) for j in range(1, n + 1)))

    @property
    def max_shift_degree(self) -> int:
        return max((t.shift_degree for terms in self.slots for t in terms), default=1)


@dataclass(frozen=True)
class FormalRepresentation:
    """Tripla (μ, z_0, ĉ): μ letra -> campo, estado inicial, saídas ĉ_k."""

    alphabet: Alphabet
    n: int
    mu: Mapping[int, StateField]
    outputs: Tuple[TensorFunctional, ...]
    initial: Optional[Tuple[GroupElement, ...]] = None
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        missing = [i for i in self.alphabet.letters if i not in self.mu]
        if missing:
            raise EngineError("representation lacks fields for letters",
                              context={"letters": missing})
        for letter, V in self.mu.items():
            self.alphabet.check_letter(letter)
            if V.n != self.n or V.alphabet != self.alphabet:
                raise DimensionMismatchError("field incompatible with representation",
                                             context={"letter": letter, "n": V.n})
        if not self.outputs:
            raise EngineError("representation needs at least one output")
        for out in self.outputs:
            if out.n != self.n or out.alphabet != self.alphabet:
                raise DimensionMismatchError("output functional incompatible with representation")
        initial = self.initial
        if initial is None:
            initial = tuple(GroupElement.identity(self.alphabet) for _ in range(self.n))
        if len(initial) != self.n:
            raise DimensionMismatchError("initial state has wrong dimension",
                                         context={"n": self.n, "got": len(initial)})
        object.__setattr__(self, "initial", tuple(initial))
        object.__setattr__(self, "mu", dict(self.mu))

    @property
    def max_shift_degree(self) -> int:
        return max(V.max_shift_degree for V in self.mu.values())

    @property
    def starts_at_identity(self) -> bool:
        return all(z.is_identity for z in self.initial)

    @property
    def initial_depth(self) -> int:
        return sum(z.depth for z in self.initial)

    def budget(self, remaining: int) -> int:
        return remaining * self.max_shift_degree + self.initial_depth

    def output(self, k: int) -> TensorFunctional:
        if not 1 <= k <= len(self.outputs):
            raise DimensionMismatchError("output index out of range",
                                         context={"k": k, "outputs": len(self.outputs)})
        return self.outputs[k - 1]


# =================================================================
# DERIVADA DE LIE FORMAL
# =================================================================

def _lie_derivative_map(V: StateField, monomials: Mapping[Monomial, Fraction],
                        budget: Optional[int]) -> MonomialMap:
    out: MonomialMap = {}
    for mono, a in monomials.items():
        degree = total_degree(mono)
        for j, terms in enumerate(V.slots):
            word = mono[j]
            for term in terms:
                coeff_monomials = term.coeff.monomials()
                for eta, b in term.shift.support.items():
                    k = len(eta)
                    if word[:k] != eta:
                        continue
                    base = mono[:j] + (word[k:],) + mono[j + 1:]
                    base_degree = degree - k
                    ab = a * b
                    for g, c in coeff_monomials.items():
                        if budget is not None and base_degree + total_degree(g) > budget:
                            continue
                        abc = ab * c
                        for new, mult in shuffle_monomials(base, g):
                            out[new] = out.get(new, Fraction(0)) + mult * abc
    return prune(out, budget)


def lie_derivative(V: StateField, functional: TensorFunctional,
                   budget: Optional[int] = None) -> TensorFunctional:
    """L_V ĉ com poda de grau total > budget (None desliga a poda)."""
    if V.n != functional.n:
        raise DimensionMismatchError("field and functional slot counts differ",
                                     context={"field": V.n, "functional": functional.n})
    if V.alphabet != functional.alphabet:
        raise AlphabetMismatchError("field and functional over different alphabets")
    if budget is not None and budget < 0:
        raise EngineError("budget must be >= 0", context={"budget": budget})
    result = _lie_derivative_map(V, functional.monomials(), budget)
    return TensorFunctional.from_monomials(functional.alphabet, functional.n, result)


def _evaluate_map(rep: FormalRepresentation, monomials: Mapping[Monomial, Fraction]) -> Fraction:
    if rep.starts_at_identity:
        empty = tuple(EMPTY_WORD for _ in range(rep.n))
        return monomials.get(empty, Fraction(0))
    functional = TensorFunctional.from_monomials(rep.alphabet, rep.n, dict(monomials))
    return evaluate_grouplike(functional, rep.initial)


def evaluate_initial(rep: FormalRepresentation, functional: TensorFunctional) -> Fraction:
    """ĉ(z_0)"""
    if rep.starts_at_identity:
        return evaluate_identity(functional)
    return evaluate_grouplike(functional, rep.initial)


# =================================================================
# COEFICIENTES E SÉRIE GERADORA
# =================================================================

def derivative_chain(rep: FormalRepresentation, k: int, word: Sequence[int]) -> List[TensorFunctional]:
    """[ĉ_k, L ĉ_k, L L ĉ_k, ...] na ordem em que o motor os produz."""
    word = rep.alphabet.check_word(word)
    current = rep.output(k)
    chain = [current]
    for idx, letter in enumerate(word):
        remaining = len(word) - idx - 1
        current = lie_derivative(rep.mu[letter], current, rep.budget(remaining))
        chain.append(current)
    return chain


def coefficient(rep: FormalRepresentation, k: int, word: Sequence[int]) -> Fraction:
    """⟨d_k, η⟩ = L_{μ(x_{i_1})} ... L_{μ(x_{i_k})} ĉ_k(z_0) com η = x_{i_k} ... x_{i_1}."""
    word = rep.alphabet.check_word(word)
    current = prune(rep.output(k).monomials(), rep.budget(len(word)))
    for idx, letter in enumerate(word):
        if not current:
            return Fraction(0)
        remaining = len(word) - idx - 1
        current = _lie_derivative_map(rep.mu[letter], current, rep.budget(remaining))
    return _evaluate_map(rep, current)


@log_execution
def generating_series(rep: FormalRepresentation, k: int, n: int) -> Series:
    """Série d_k com ⟨d_k, η⟩ = coefficient(rep, k, η) para |η| <= n.

    Percorre a árvore de prefixos em profundidade; o prefixo de comprimento L
    é podado com o orçamento das palavras mais longas que o estendem.
    """
    if n < 0:
        raise EngineError("degree must be >= 0", context={"n": n})
    data: Dict[Word, Fraction] = {}
    root = prune(rep.output(k).monomials(), rep.budget(n))
    stack: List[Tuple[Word, MonomialMap]] = [(EMPTY_WORD, root)]
    while stack:
        prefix, current = stack.pop()
        value = _evaluate_map(rep, current)
        if value:
            data[prefix] = value
        if len(prefix) == n or not current:
            continue
        budget = rep.budget(n - len(prefix) - 1)
        for letter in rep.alphabet.letters:
            child = _lie_derivative_map(rep.mu[letter], current, budget)
            if child:
                stack.append((prefix + (letter,), child))
    logger.debug("Série d_%s até grau %s: %s termos", k, n, len(data))
    return Series(rep.alphabet, data, n)


def trivial_representation(c: Series, initial: Optional[GroupElement] = None) -> FormalRepresentation:
    """n = 1, μ(x_i) = x_i, z_0 = 1 (ou ``initial``), ĉ = c."""
    alphabet = c.alphabet
    unit = TensorFunctional.unit(alphabet, 1)
    mu = {
        i: StateField.build(alphabet, 1, {1: [FieldTerm.letter(alphabet, i, unit)]})
        for i in alphabet.letters
    }
    return FormalRepresentation(
        alphabet=alphabet,
        n=1,
        mu=mu,
        outputs=(embed(c.as_polynomial(), 1, 1),),
        initial=None if initial is None else (initial,),
        label="trivial",
    )


__all__ = [
    "FieldTerm", "StateField", "FormalRepresentation",
    "lie_derivative", "evaluate_initial", "derivative_chain",
    "coefficient", "generating_series", "trivial_representation",
]
