"""
Comando ``verify``: erro máximo entre simulação e série geradora truncada
para cada N pedido.
"""

from __future__ import annotations

from typing import Tuple

import pandas as pd

from src.models.network_spec import NetworkSpec
from src.simulation.numeric import ConstantInput, verify_order
from src.jobs.simulate import read_numeric_inputs
from src.utils.job_base import BaseJob, JobContext


class VerifyJob(BaseJob):
    command = "verify"

    def extract(self, context: JobContext) -> Tuple[NetworkSpec, ConstantInput]:
        return read_numeric_inputs(self, context)

    def transform(self, data: Tuple[NetworkSpec, ConstantInput], context: JobContext) -> pd.DataFrame:
        spec, v = data
        degrees = context.extra.get("Ns") or list(range(1, max(spec.degree, 1) + 1))
        table = verify_order(spec, v, v.T, degrees, v.steps)
        if not table["error"].is_monotonic_decreasing:
            self.logger.warning("Erro não decresce monotonamente em N: %s", table["error"].tolist())
        return table


__all__ = ["VerifyJob"]
