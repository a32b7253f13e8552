"""
Comando ``compose``: série c ∘ d pelo oráculo de composição.

Lê um documento ``kind = "cascade"`` (nó 1 externo c, nó 2 interno d).
"""

from __future__ import annotations

from fractions import Fraction

import pandas as pd

from src.algebra.words import enumerate_words
from src.core.exceptions import ConfigurationError, ParseError
from src.models.composition import compose
from src.models.network_spec import NetworkSpec, parse_network_spec
from src.jobs.coeffs import format_exact_table
from src.utils.job_base import BaseJob, JobContext
from src.utils.naming_conventions import NamingConventions


class ComposeJob(BaseJob):
    command = "compose"

    def extract(self, context: JobContext) -> NetworkSpec:
        source = context.extra.get("input")
        if source is None:
            raise ConfigurationError("compose needs --input")
        spec = parse_network_spec(source, context.extra.get("degree"), self.config)
        if spec.kind != "cascade":
            raise ParseError(f"compose needs a cascade document, got {spec.kind}")
        return spec

    def transform(self, spec: NetworkSpec, context: JobContext) -> pd.DataFrame:
        outer, inner = spec.series
        result = compose(outer, (inner,), spec.degree)
        support = result.support
        rows = [{"word": w, "coeff": support.get(w, Fraction(0))}
                for w in enumerate_words(spec.alphabet, spec.degree)]
        return pd.DataFrame(rows, columns=NamingConventions.get_columns("compose"))

    def present(self, table: pd.DataFrame, context: JobContext) -> pd.DataFrame:
        return format_exact_table(table, context.output_format, context.output_format == "text")


__all__ = ["ComposeJob"]
