"""
Produto de composição c ∘ d (série geradora da cascata F_c ∘ F_d).

    c ∘ d = Σ_η̃ ⟨c, η̃⟩ ψ_d(η̃)(1),   ψ_d(x̃_i)(e) = x_0 (d_i ⧢ e),   d_0 = 1

com ψ_d(x̃_{i_1} ... x̃_{i_k}) = ψ_d(x̃_{i_1}) ∘ ... ∘ ψ_d(x̃_{i_k}). Serve como
oráculo independente do motor de representações.
"""

import logging
from fractions import Fraction
from typing import Dict, Optional, Sequence

from src.algebra.series import Series, shuffle_words
from src.algebra.words import EMPTY_WORD, Word
from src.core.core import log_execution
from src.core.exceptions import AlphabetMismatchError, DimensionMismatchError, EngineError

logger = logging.getLogger(__name__)

SeriesMap = Dict[Word, Fraction]


def _psi_letter(d_i: Optional[SeriesMap], e: SeriesMap, n: int) -> SeriesMap:
    """x_0 (d_i ⧢ e) truncada em n; ``d_i = None`` representa d_0 = 1."""
    out: SeriesMap = {}
    if d_i is None:
        for w, a in e.items():
            if len(w) < n:
                out[(0,) + w] = out.get((0,) + w, Fraction(0)) + a
        return out
    for u, a in d_i.items():
        for w, b in e.items():
            if len(u) + len(w) >= n:
                continue
            ab = a * b
            for s, k in shuffle_words(u, w):
                key = (0,) + s
                out[key] = out.get(key, Fraction(0)) + k * ab
    return {w: v for w, v in out.items() if v}


@log_execution
def compose(c: Series, d: Sequence[Series], n: int) -> Series:
    """c sobre {x̃_0, ..., x̃_m̃}, d = (d_1, ..., d_m̃) sobre X; resultado truncado em n."""
    if n < 0:
        raise EngineError("degree must be >= 0", context={"n": n})
    d = tuple(d)
    if not d:
        raise DimensionMismatchError("compose needs at least one inner series")
    if c.alphabet.m != len(d):
        raise DimensionMismatchError(
            "outer alphabet size differs from number of inner series",
            context={"outer_m": c.alphabet.m, "inner": len(d)},
        )
    alphabet = d[0].alphabet
    if any(di.alphabet != alphabet for di in d):
        raise AlphabetMismatchError("inner series over different alphabets")
    for di in d:
        if di.cap is not None and di.cap < n:
            raise EngineError("inner series cap below requested degree", context={"cap": di.cap, "n": n})
    if c.cap is not None and c.cap < n:
        raise EngineError("outer series cap below requested degree", context={"cap": c.cap, "n": n})

    inner = [None] + [{w: v for w, v in di.support.items() if len(w) < n} for di in d]
    memo: Dict[Word, SeriesMap] = {EMPTY_WORD: {EMPTY_WORD: Fraction(1)}}

    def psi(word: Word) -> SeriesMap:
        # ψ_d(η̃)(1) pela recursão da direita para a esquerda, memoizada por sufixo
        cached = memo.get(word)
        if cached is None:
            cached = _psi_letter(inner[word[0]], psi(word[1:]), n)
            memo[word] = cached
        return cached

    total: SeriesMap = {}
    for word, coeff in c.support.items():
        if len(word) > n:
            continue
        for w, v in psi(word).items():
            total[w] = total.get(w, Fraction(0)) + coeff * v
    logger.debug("Composição com %s sufixos memorizados", len(memo))
    return Series(alphabet, total, n)


__all__ = ["compose"]
