"""
Convenções de nomenclatura compartilhadas entre jobs e renderizadores.

Centraliza nomes de colunas das tabelas emitidas por cada comando e a forma
textual de palavras e coeficientes em cada formato de saída.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List

import pandas as pd

from src.algebra.words import Word, format_word
from src.core.core import format_coefficient


class NamingConventions:
    """Coleção de helpers estáticos para nomenclaturas padronizadas."""

    # Colunas padrão por comando (utilizadas pelo validador dos jobs)
    COMMAND_COLUMNS: Dict[str, List[str]] = {
        "coeffs": ["output", "word", "coeff"],
        "trace": ["step", "letter", "functional", "value"],
        "compose": ["word", "coeff"],
        "simulate": ["t"],
        "verify": ["N", "error"],
        "selftest": ["check", "status", "detail", "seconds"],
    }

    EMPTY_WORD_TEXT = "∅"

    @classmethod
    def get_columns(cls, command: str, m: int = 0) -> List[str]:
        columns = list(cls.COMMAND_COLUMNS[command])
        if command == "simulate":
            columns += [cls.output_column(k) for k in range(1, m + 1)]
        return columns

    @staticmethod
    def output_column(k: int) -> str:
        return f"y_{k}"

    @classmethod
    def word_label(cls, word: Word, output_format: str = "text") -> str:
        """'x0 x1'; palavra vazia vira '∅' no texto e '' em csv/json (sintaxe de parse_word)."""
        return format_word(word, cls.EMPTY_WORD_TEXT if output_format == "text" else "")

    @staticmethod
    def coefficient_label(value: Fraction) -> str:
        return format_coefficient(value)

    @classmethod
    def missing_columns(cls, df: pd.DataFrame, command: str, m: int = 0) -> List[str]:
        return [c for c in cls.get_columns(command, m) if c not in df.columns]

    @staticmethod
    def parse_int_list(text: str) -> List[int]:
        """'1,2,3' -> [1, 2, 3]"""
        return [int(p) for p in (s.strip() for s in text.split(",")) if p]

    @staticmethod
    def parse_float_list(text: str) -> List[float]:
        return [float(p) for p in (s.strip() for s in text.split(",")) if p]


__all__ = ["NamingConventions"]
