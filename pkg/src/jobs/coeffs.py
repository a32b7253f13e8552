"""
Comando ``coeffs``: tabela de coeficientes ⟨d_k, η⟩ para |η| <= N.

Com ``trace`` imprime a cadeia de derivadas de Lie de uma palavra em vez da
tabela.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

import pandas as pd

from src.algebra.words import enumerate_words, format_word, parse_word
from src.core.exceptions import ConfigurationError
from src.engine.representation import (
    FormalRepresentation,
    derivative_chain,
    evaluate_initial,
    generating_series,
)
from src.models.builders import build_representation
from src.models.network_spec import NetworkSpec, parse_network_spec
from src.utils.job_base import BaseJob, JobContext
from src.utils.naming_conventions import NamingConventions


def _selected_outputs(rep: FormalRepresentation, outputs: Optional[Sequence[int]]) -> List[int]:
    available = range(1, len(rep.outputs) + 1)
    if not outputs:
        return list(available)
    for k in outputs:
        if k not in available:
            raise ConfigurationError("requested output does not exist",
                                     context={"output": k, "available": len(rep.outputs)})
    return list(outputs)


def format_exact_table(table: pd.DataFrame, output_format: str, drop_zeros: bool) -> pd.DataFrame:
    """Palavras e racionais como texto; linhas nulas omitidas quando pedido."""
    if drop_zeros:
        table = table[table["coeff"] != 0]
    shown = table.copy()
    shown["word"] = [NamingConventions.word_label(w, output_format) for w in table["word"]]
    shown["coeff"] = [NamingConventions.coefficient_label(v) for v in table["coeff"]]
    return shown.reset_index(drop=True)


class CoeffsJob(BaseJob):
    command = "coeffs"

    def extract(self, context: JobContext) -> NetworkSpec:
        source = context.extra.get("input")
        if source is None:
            raise ConfigurationError("coeffs needs --input")
        return parse_network_spec(source, context.extra.get("degree"), self.config)

    def transform(self, spec: NetworkSpec, context: JobContext) -> pd.DataFrame:
        rep = build_representation(spec)
        outputs = _selected_outputs(rep, context.extra.get("outputs"))
        trace = context.extra.get("trace")
        if trace is not None:
            return self._trace(rep, outputs[0], trace)

        words = enumerate_words(rep.alphabet, spec.degree)
        rows = []
        for k in outputs:
            d = generating_series(rep, k, spec.degree)
            support = d.support
            rows.extend({"output": k, "word": w, "coeff": support.get(w, Fraction(0))} for w in words)
        return pd.DataFrame(rows, columns=NamingConventions.get_columns("coeffs"))

    def _trace(self, rep: FormalRepresentation, k: int, text: str) -> pd.DataFrame:
        word = parse_word(text, rep.alphabet)
        self.logger.info("Cadeia de derivadas de Lie para %s (saída %s)", format_word(word, "∅"), k)
        chain = derivative_chain(rep, k, word)
        rows = [
            {
                "step": step,
                "letter": f"x{word[step - 1]}" if step else "",
                "functional": str(functional),
                "value": evaluate_initial(rep, functional),
            }
            for step, functional in enumerate(chain)
        ]
        return pd.DataFrame(rows, columns=NamingConventions.get_columns("trace"))

    def table_kind(self, context: JobContext) -> str:
        return "trace" if context.extra.get("trace") is not None else self.command

    def present(self, table: pd.DataFrame, context: JobContext) -> pd.DataFrame:
        if context.extra.get("trace") is not None:
            shown = table.copy()
            shown["value"] = [NamingConventions.coefficient_label(v) for v in table["value"]]
            return shown
        return format_exact_table(table, context.output_format, context.output_format == "text")


__all__ = ["CoeffsJob", "format_exact_table"]
