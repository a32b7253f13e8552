"""
Verificação numérica em ponto flutuante.

Avalia séries de Chen-Fliess truncadas em entradas constantes e integra as
equações de estado formais truncadas de uma rede,

    ż_j = (x_0 + x_j u_j) z_j,   z_j(0) = 1,   y_j = ⟨c_j, z_j⟩,

com u_j = v_j + Σ_l M_jl y_l (aditiva), u_j = v_j Π_l M_jl y_l (multiplicativa)
ou u_1 = y_2, u_2 = v_1 (cascata: nó 1 externo, nó 2 interno). Cada estado é
um vetor numpy indexado pelas palavras de {x_0, x_j}* com comprimento <= N em
ordem comprimento-lex; a derivada só desloca massa para palavras mais longas,
de modo que o truncamento é exato até N.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src.algebra.series import Series
from src.algebra.words import Word, iter_words
from src.core.core import log_execution
from src.core.exceptions import ConfigurationError, DimensionMismatchError, SimulationError
from src.engine.representation import generating_series
from src.models.builders import build_representation
from src.models.network_spec import NetworkSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstantInput:
    """u_i(t) = values[i-1] em [0, T], integrado com ``steps`` passos."""

    values: Tuple[float, ...]
    T: float = 1.0
    steps: int = 1000

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.T > 0:
            raise ConfigurationError("horizon T must be > 0", context={"T": self.T})
        if self.steps < 1:
            raise ConfigurationError("step count must be >= 1", context={"steps": self.steps})

    def channel(self, letter: int) -> float:
        """u_0 = 1; u_i = values[i-1]."""
        if letter == 0:
            return 1.0
        if not 1 <= letter <= len(self.values):
            raise DimensionMismatchError("input channel out of range",
                                         context={"letter": letter, "channels": len(self.values)})
        return self.values[letter - 1]

    @property
    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.T, self.steps + 1)


@dataclass
class SimResult:
    times: np.ndarray
    outputs: np.ndarray                 # (len(times), m)
    states: List[np.ndarray]            # por nó: (len(times), n_palavras)
    words: List[Word] = field(default_factory=list)
    node_letters: Tuple[int, ...] = ()

    def to_frame(self) -> pd.DataFrame:
        data = {"t": self.times}
        for j in range(self.outputs.shape[1]):
            data[f"y_{j + 1}"] = self.outputs[:, j]
        return pd.DataFrame(data)


# =================================================================
# FLIESS EM ENTRADAS CONSTANTES
# =================================================================

def iterated_integral_const(word: Sequence[int], u: ConstantInput, t: float) -> float:
    """E_η[u](t) = u_{i_1} ... u_{i_k} t^k / k!"""
    value = t ** len(word) / math.factorial(len(word))
    for letter in word:
        value *= u.channel(letter)
    return value


def _length_sums(c: Series, u: ConstantInput, n: int) -> np.ndarray:
    """s_k = Σ_{|η|=k} ⟨c,η⟩ Π u_η para k = 0..n."""
    sums = np.zeros(n + 1)
    for word, coeff in c.support.items():
        if len(word) <= n:
            weight = float(coeff)
            for letter in word:
                weight *= u.channel(letter)
            sums[len(word)] += weight
    return sums


def fliess_eval(c: Series, u: ConstantInput, t: float, n: int) -> float:
    """Σ_{|η|<=N} ⟨c,η⟩ E_η[u](t)"""
    if c.cap is not None and c.cap < n:
        raise DimensionMismatchError("series cap below evaluation degree", context={"cap": c.cap, "n": n})
    return float(fliess_predict(c, u, np.array([t]), n)[0])


def fliess_predict(d: Series, u: ConstantInput, times: np.ndarray, n: int) -> np.ndarray:
    """Previsão Σ_{|η|<=N} ⟨d,η⟩ E_η[u](t) sobre uma malha de tempos."""
    sums = _length_sums(d, u, n)
    times = np.asarray(times, dtype=float)
    powers = np.vstack([times ** k / math.factorial(k) for k in range(n + 1)])
    return sums @ powers


# =================================================================
# INTEGRAÇÃO DAS EQUAÇÕES DE ESTADO TRUNCADAS
# =================================================================

class _TruncatedState:
    """Layout compartilhado por todos os nós: palavras de {x_0, x_in}* até N."""

    def __init__(self, n: int) -> None:
        self.local_words = list(iter_words((0, 1), n))
        index = {w: k for k, w in enumerate(self.local_words)}
        nonempty = self.local_words[1:]
        self.target = np.arange(1, len(self.local_words))
        self.tail = np.array([index[w[1:]] for w in nonempty], dtype=int)
        self.driven = np.array([w[0] == 1 for w in nonempty], dtype=bool)
        self.index = index

    @property
    def size(self) -> int:
        return len(self.local_words)

    def initial(self) -> np.ndarray:
        z = np.zeros(self.size)
        z[0] = 1.0
        return z

    def derivative(self, z: np.ndarray, u: float) -> np.ndarray:
        dz = np.zeros_like(z)
        dz[self.target] = z[self.tail] * np.where(self.driven, u, 1.0)
        return dz

    def coefficients(self, c: Series, input_letter: int) -> np.ndarray:
        vec = np.zeros(self.size)
        for word, coeff in c.support.items():
            local = tuple(0 if letter == 0 else 1 for letter in word)
            k = self.index.get(local)
            if k is not None and all(letter in (0, input_letter) for letter in word):
                vec[k] += float(coeff)
        return vec


def _inputs(spec: NetworkSpec, M: np.ndarray, v: np.ndarray, y: np.ndarray) -> np.ndarray:
    if spec.kind == "additive":
        return v + M @ y
    if spec.kind == "multiplicative":
        return v * np.prod(M * y[np.newaxis, :], axis=1)
    return np.array([y[1], v[0]])


def runge_kutta4(f, state: np.ndarray, h: float) -> np.ndarray:
    """Passo clássico de quarta ordem para ṡ = f(s) autônomo."""
    k1 = f(state)
    k2 = f(state + 0.5 * h * k1)
    k3 = f(state + 0.5 * h * k2)
    k4 = f(state + h * k3)
    return state + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


@log_execution
def simulate_network(spec: NetworkSpec, v: ConstantInput, n: Optional[int] = None,
                     steps: Optional[int] = None) -> SimResult:
    """Integra os estados truncados em N (padrão: grau da rede)."""
    n = spec.degree if n is None else n
    if n < 1:
        raise ConfigurationError("simulation degree must be >= 1", context={"n": n})
    steps = v.steps if steps is None else steps
    if steps < 1:
        raise ConfigurationError("step count must be >= 1", context={"steps": steps})
    channels = 1 if spec.kind == "cascade" else spec.m
    if len(v.values) != channels:
        raise DimensionMismatchError("number of input values differs from input channels",
                                     context={"expected": channels, "got": len(v.values)})

    layout = _TruncatedState(n)
    m, size = spec.m, layout.size
    letters = tuple(node.input_letter for node in spec.nodes)
    C = np.vstack([layout.coefficients(node.series, node.input_letter) for node in spec.nodes])
    M = np.array(spec.M.as_floats())
    vv = np.array(v.values if spec.kind != "cascade" else v.values + (0.0,))

    def outputs_of(flat: np.ndarray) -> np.ndarray:
        return np.einsum("jk,jk->j", C, flat.reshape(m, size))

    def field_of(flat: np.ndarray) -> np.ndarray:
        blocks = flat.reshape(m, size)
        u = _inputs(spec, M, vv, outputs_of(flat))
        return np.concatenate([layout.derivative(blocks[j], u[j]) for j in range(m)])

    h = v.T / steps
    times = np.linspace(0.0, v.T, steps + 1)
    flat = np.concatenate([layout.initial() for _ in range(m)])
    history = np.empty((steps + 1, m * size))
    history[0] = flat
    for k in range(steps):
        flat = runge_kutta4(field_of, flat, h)
        if not np.all(np.isfinite(flat)):
            raise SimulationError("state became non-finite", context={"step": k + 1, "t": times[k + 1]})
        history[k + 1] = flat

    outputs = np.einsum("jk,tjk->tj", C, history.reshape(steps + 1, m, size))
    states = [history[:, j * size:(j + 1) * size] for j in range(m)]
    logger.info("Simulação %s: %s passos, T=%s, N=%s", spec.kind, steps, v.T, n)
    return SimResult(times, outputs, states, layout.local_words, letters)


def state_as_series(result: SimResult, spec: NetworkSpec, node: int, step: int = -1) -> Series:
    """Estado z_node(t) como série racional (conversão exata dos floats)."""
    letter = result.node_letters[node - 1]
    values = result.states[node - 1][step]
    n = max(len(w) for w in result.words)
    data: Dict[Word, Fraction] = {}
    for word, value in zip(result.words, values):
        if value:
            data[tuple(letter if x else 0 for x in word)] = Fraction(float(value))
    return Series(spec.alphabet, data, n)


# =================================================================
# ORDEM DE APROXIMAÇÃO
# =================================================================

def _prediction_error(spec: NetworkSpec, sim: SimResult, v: ConstantInput,
                      series: Dict[int, Series], n: int) -> float:
    worst = 0.0
    for k, d in series.items():
        predicted = fliess_predict(d, v, sim.times, n)
        worst = max(worst, float(np.max(np.abs(sim.outputs[:, k - 1] - predicted))))
    return worst


def _engine_series(spec: NetworkSpec, n: int) -> Dict[int, Series]:
    rep = build_representation(spec.with_degree(n))
    outputs = (1,) if spec.kind == "cascade" else range(1, spec.m + 1)
    return {k: generating_series(rep, k, n) for k in outputs}


@log_execution
def verify_order(spec: NetworkSpec, v: ConstantInput, T: float, degrees: Sequence[int],
                 steps: Optional[int] = None) -> pd.DataFrame:
    """Tabela (N, erro máximo em [0,T]) entre simulação e série geradora truncada.

    A simulação de referência usa N_ref = max(grau da rede, max(degrees)), exata
    para as séries da rede (já truncadas no grau do documento).
    """
    if not degrees:
        raise ConfigurationError("at least one degree is required")
    if min(degrees) < 0:
        raise ConfigurationError("degrees must be >= 0", context={"degrees": list(degrees)})
    reference = max(spec.degree, max(degrees), 1)
    run = ConstantInput(v.values, T, steps or v.steps)
    sim = simulate_network(spec, run, reference)
    series = _engine_series(spec, max(degrees))
    rows = []
    for n in sorted(set(degrees)):
        error = _prediction_error(spec, sim, run, series, n)
        logger.debug("N=%s erro=%.3e", n, error)
        rows.append({"N": n, "error": error})
    return pd.DataFrame(rows, columns=["N", "error"])


def measured_order(spec: NetworkSpec, v: ConstantInput, T: float, n: int,
                   steps: Optional[int] = None) -> float:
    """log2(erro(N; T) / erro(N; T/2)): expoente de escala do erro de truncamento."""
    coarse = verify_order(spec, v, T, [n], steps)["error"].iloc[0]
    fine = verify_order(spec, v, T / 2, [n], steps)["error"].iloc[0]
    if fine <= 0 or coarse <= 0:
        raise SimulationError("truncation error vanished; order is undefined",
                              context={"coarse": coarse, "fine": fine})
    return math.log2(coarse / fine)


__all__ = [
    "ConstantInput", "SimResult",
    "iterated_integral_const", "fliess_eval", "fliess_predict",
    "runge_kutta4", "simulate_network", "state_as_series",
    "verify_order", "measured_order",
]
