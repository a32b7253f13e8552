#!/usr/bin/env python3
"""
Comando ``selftest``: executa a bateria de aceitação embutida.

Cada verificação é registrada em ``SELFTEST_CHECKS`` (chave, nome, descrição,
ordem e função). Uma função devolve um detalhe textual quando passa e lança
exceção quando falha.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

import pandas as pd

from src.algebra.lie import exp_truncated, is_group_like, is_primitive_ree, log_truncated
from src.algebra.sampling import random_lie_polynomial, random_polynomial
from src.algebra.series import Series, concat, left_shift_letter, shuffle, truncate
from src.algebra.tensor import TensorFunctional
from src.algebra.words import Alphabet, enumerate_words
from src.core.exceptions import ConfigurationError, InvariantViolationError
from src.engine.representation import (
    coefficient,
    derivative_chain,
    generating_series,
    trivial_representation,
)
from src.models.builders import build_cascade, build_representation, network_from_series
from src.models.composition import compose
from src.models.network_spec import factorial_geometric
from src.simulation.numeric import ConstantInput, measured_order, verify_order
from src.utils.job_base import BaseJob, JobContext
from src.utils.naming_conventions import NamingConventions

X1 = Alphabet(1)


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantViolationError(message)


def _co(c: Series, *word: int) -> Fraction:
    return c.support.get(tuple(word), Fraction(0))


# =================================================================
# VERIFICAÇÕES
# =================================================================

def check_composition() -> str:
    c = Series.word(X1, (1, 1))
    d = Series.letter(X1, 1)
    expected = Series(X1, {(0, 1, 0, 1): 1, (0, 0, 1, 1): 2})
    _expect(compose(c, (d,), 4) == expected, "compose(x1 x1, x1) differs from x0x1x0x1 + 2*x0x0x1x1")
    _expect(generating_series(build_cascade(c, d), 1, 4) == expected,
            "cascade representation differs from the composition product")
    return str(expected)


def check_lie_chain() -> str:
    rep = build_cascade(Series.word(X1, (1, 1)), Series.letter(X1, 1))
    chain = derivative_chain(rep, 1, (0, 0, 1, 1))
    expected = [
        {((1,), (1,)): Fraction(1)},
        {((1, 1), ()): Fraction(2)},
        {((1,), ()): Fraction(2)},
    ]
    for step, monomials in enumerate(expected, start=1):
        _expect(chain[step] == TensorFunctional.from_monomials(X1, 2, monomials),
                f"derivative chain step {step} is {chain[step]}")
    value = coefficient(rep, 1, (0, 0, 1, 1))
    _expect(value == 2, f"coefficient of x0x0x1x1 is {value}")
    return " -> ".join(str(f) for f in chain[1:4])


def check_additive_single(samples: int = 20) -> str:
    rng = random.Random(5)
    for _ in range(samples):
        c = random_polynomial(rng, X1, 3)
        rep = build_representation(network_from_series("additive", [c], [[1]], 3))
        c0 = _co(c)
        forms = {
            (): c0,
            (1,): _co(c, 1),
            (0,): _co(c, 0) + _co(c, 1) * c0,
            (1, 1): _co(c, 1, 1),
            (0, 1): _co(c, 0, 1) + _co(c, 1) ** 2 + _co(c, 1, 1) * c0,
            (1, 0): _co(c, 1, 0) + _co(c, 1, 1) * c0,
            (0, 0): (_co(c, 0, 0) + _co(c, 1) * _co(c, 0) + _co(c, 1, 0) * c0 + _co(c, 0, 1) * c0
                     + _co(c, 1) ** 2 * c0 + _co(c, 1, 1) * c0 ** 2),
        }
        for word, value in forms.items():
            got = coefficient(rep, 1, word)
            _expect(got == value, f"single-node additive: word {word} gives {got}, expected {value}")
    return f"{samples} amostras x 7 palavras"


def check_additive_networks() -> str:
    rng = random.Random(11)
    X2, X3 = Alphabet(2), Alphabet(3)
    c1 = random_polynomial(rng, X2, 3, letters=(0, 1))
    c2 = random_polynomial(rng, X2, 3, letters=(0, 2))
    rep = build_representation(network_from_series("additive", [c1, c2], [[0, 1], [1, 0]], 3))
    s2 = _co(c2)
    forms = {
        (): _co(c1), (1,): _co(c1, 1), (2,): 0,
        (0,): _co(c1, 0) + _co(c1, 1) * s2,
        (1, 1): _co(c1, 1, 1), (1, 2): 0, (2, 1): 0, (2, 2): 0,
        (1, 0): _co(c1, 1, 0) + _co(c1, 1, 1) * s2,
        (0, 1): _co(c1, 0, 1) + _co(c1, 1, 1) * s2,
    }
    for word, value in forms.items():
        _expect(coefficient(rep, 1, word) == value, f"two-node additive: word {word}")

    c1 = random_polynomial(rng, X3, 3, letters=(0, 1))
    c2 = random_polynomial(rng, X3, 3, letters=(0, 2))
    c3 = random_polynomial(rng, X3, 3, letters=(0, 3))
    ones = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    rep = build_representation(network_from_series("additive", [c1, c2, c3], ones, 3))
    feedback = _co(c2) + _co(c3)
    forms = {
        (): _co(c1), (1,): _co(c1, 1), (2,): 0, (3,): 0,
        (0,): _co(c1, 0) + _co(c1, 1) * feedback,
        (1, 1): _co(c1, 1, 1), (1, 2): 0, (1, 3): 0,
        (1, 0): _co(c1, 1, 0) + _co(c1, 1, 1) * feedback,
        (0, 1): _co(c1, 0, 1) + _co(c1, 1, 1) * feedback,
    }
    for word, value in forms.items():
        _expect(coefficient(rep, 1, word) == value, f"three-node additive: word {word}")
    return "2 e 3 nós"


def check_multiplicative_loop() -> str:
    c = factorial_geometric(X1, 1, 6)
    d = generating_series(build_representation(network_from_series("multiplicative", [c], [[1]], 6)), 1, 4)
    values = [_co(d, *(1,) * k) for k in range(5)]
    _expect(values[:4] == [1, 1, 3, 15], f"multiplicative loop starts {values[:4]}")
    a = [_co(c, *(1,) * k) for k in range(5)]
    quartic = (a[0] * a[1] ** 4 + 11 * a[0] ** 2 * a[1] ** 2 * a[2] + 4 * a[0] ** 3 * a[2] ** 2
               + 7 * a[0] ** 3 * a[1] * a[3] + a[0] ** 4 * a[4])
    _expect(values[4] == quartic, f"degree-4 coefficient {values[4]} differs from {quartic}")
    return " + ".join(f"{v}*x1^{k}" for k, v in enumerate(values))


def check_trivial_representation() -> str:
    rng = random.Random(3)
    X2 = Alphabet(2)
    for _ in range(5):
        c = random_polynomial(rng, X2, 4, terms=10)
        rep = trivial_representation(c)
        for word in enumerate_words(X2, 4):
            _expect(coefficient(rep, 1, word) == _co(c, *word), f"trivial representation at {word}")
    return "5 séries, |η| <= 4"


def check_properties() -> str:
    rng = random.Random(17)
    X2 = Alphabet(2)
    for _ in range(5):
        a, b, c = (random_polynomial(rng, X2, 2, terms=3) for _ in range(3))
        _expect(shuffle(a, b) == shuffle(b, a), "shuffle is not commutative")
        _expect(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)), "shuffle is not associative")
        _expect(concat(concat(a, b), c) == concat(a, concat(b, c)), "concatenation is not associative")
        for i in X2.letters:
            lhs = left_shift_letter(i, shuffle(a, b))
            rhs = shuffle(left_shift_letter(i, a), b) + shuffle(a, left_shift_letter(i, b))
            _expect(lhs == rhs, "left shift is not a shuffle derivation")
        p = random_lie_polynomial(rng, X2)
        _expect(is_primitive_ree(p, 4), "random bracket combination fails Ree's criterion")
        z = exp_truncated(p, 4)
        _expect(is_group_like(z.series, 4), "exponential of a Lie polynomial is not group-like")
        w = exp_truncated(random_lie_polynomial(rng, X2), 4)
        _expect(is_group_like(truncate(concat(z.series, w.series), 4), 4), "product of group-likes")
        _expect(log_truncated(z.series, 4) == truncate(p, 4), "log(exp(p)) != p")
    return "shuffle, shift, Ree, exp/log"


def check_cross_oracle(samples: int = 20, n: int = 5) -> str:
    rng = random.Random(23)
    for _ in range(samples):
        c = random_polynomial(rng, X1, 3, terms=3)
        d = random_polynomial(rng, X1, 2, terms=2)
        _expect(compose(c, (d,), n) == generating_series(build_cascade(c, d), 1, n),
                f"compose and cascade engine disagree for c={c}, d={d}")
    return f"{samples} pares, N={n}"


def check_numeric_order() -> str:
    c = Series(X1, {(1,): 1, (1, 1): Fraction(1, 2)}, 4)
    spec = network_from_series("additive", [c], [[1]], 4)
    v = ConstantInput((0.1,), 0.5, 2000)
    table = verify_order(spec, v, 0.5, [2, 4])
    e2, e4 = table["error"].tolist()
    _expect(e4 < e2 / 4, f"error(4)={e4:.3e} not below error(2)/4={e2 / 4:.3e}")
    order = measured_order(spec, v, 0.5, 3)
    _expect(3.5 <= order <= 4.5, f"measured exponent {order:.3f} outside [3.5, 4.5]")
    return f"erro(2)={e2:.2e} erro(4)={e4:.2e} expoente={order:.2f}"


SELFTEST_CHECKS: List[Dict] = [
    {"key": "composition", "nome": "COMPOSITION", "ordem": 1, "func": check_composition,
     "descricao": "Produto de composição x1² ∘ x1 e cascata"},
    {"key": "lie_chain", "nome": "LIE_CHAIN", "ordem": 2, "func": check_lie_chain,
     "descricao": "Cadeia de derivadas de Lie da cascata"},
    {"key": "additive_single", "nome": "ADDITIVE_SINGLE", "ordem": 3, "func": check_additive_single,
     "descricao": "Realimentação aditiva de um nó (formas fechadas)"},
    {"key": "additive_networks", "nome": "ADDITIVE_NETWORKS", "ordem": 4, "func": check_additive_networks,
     "descricao": "Redes aditivas de 2 e 3 nós"},
    {"key": "multiplicative_loop", "nome": "MULTIPLICATIVE_LOOP", "ordem": 5,
     "func": check_multiplicative_loop, "descricao": "Laço multiplicativo com c = Σ k! x1^k"},
    {"key": "trivial", "nome": "TRIVIAL", "ordem": 6, "func": check_trivial_representation,
     "descricao": "Representação trivial reproduz a série"},
    {"key": "properties", "nome": "PROPERTIES", "ordem": 7, "func": check_properties,
     "descricao": "Propriedades algébricas (shuffle, shift, Ree, exp/log)"},
    {"key": "cross_oracle", "nome": "CROSS_ORACLE", "ordem": 8, "func": check_cross_oracle,
     "descricao": "Oráculo de composição x motor na cascata"},
    {"key": "numeric_order", "nome": "NUMERIC_ORDER", "ordem": 9, "func": check_numeric_order,
     "descricao": "Ordem do erro de truncamento na simulação"},
]

SELFTEST_MAP = {item["key"]: item for item in SELFTEST_CHECKS}


def list_checks() -> List[str]:
    return [f"{item['key']:20s} | {item['descricao']}"
            for item in sorted(SELFTEST_CHECKS, key=lambda s: s["ordem"])]


def select_checks(keys: Optional[Iterable[str]]) -> List[Dict]:
    if not keys:
        return sorted(SELFTEST_CHECKS, key=lambda s: s["ordem"])
    selected = []
    for key in keys:
        key_norm = key.strip().lower()
        if key_norm not in SELFTEST_MAP:
            raise ConfigurationError(f"unknown selftest check '{key}'", context={"known": ",".join(SELFTEST_MAP)})
        selected.append(SELFTEST_MAP[key_norm])
    return selected


class SelftestJob(BaseJob):
    command = "selftest"

    def extract(self, context: JobContext) -> List[Dict]:
        return select_checks(context.extra.get("checks"))

    def transform(self, checks: List[Dict], context: JobContext) -> pd.DataFrame:
        rows = []
        for check in checks:
            func: Callable[[], str] = check["func"]
            inicio = time.perf_counter()
            try:
                detail = func()
                status = "PASS"
            except Exception as exc:  # pylint: disable=broad-except
                detail = str(exc)[:120]
                status = "FAIL"
                self.logger.error("❌ %s falhou: %s", check["nome"], exc)
            tempo = time.perf_counter() - inicio
            if status == "PASS":
                self.logger.info("✅ %s concluído em %.2fs", check["nome"], tempo)
            rows.append({"check": check["key"], "status": status, "detail": detail,
                         "seconds": round(tempo, 3)})
        table = pd.DataFrame(rows, columns=NamingConventions.get_columns("selftest"))
        failures = int((table["status"] == "FAIL").sum())
        self.logger.info("Selftest: %s verificação(ões), %s falha(s)", len(table), failures)
        return table


__all__ = ["SelftestJob", "SELFTEST_CHECKS", "list_checks", "select_checks"]
