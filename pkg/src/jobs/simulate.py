"""
Comando ``simulate``: trajetórias t, y_1..y_m da rede sob entrada constante.
"""

from __future__ import annotations

from typing import Tuple

import pandas as pd

from src.core.exceptions import ConfigurationError
from src.models.network_spec import NetworkSpec, parse_network_spec
from src.simulation.numeric import ConstantInput, simulate_network
from src.utils.job_base import BaseJob, JobContext


def read_numeric_inputs(job: BaseJob, context: JobContext) -> Tuple[NetworkSpec, ConstantInput]:
    """Rede + entrada constante (v, T, steps) a partir do contexto."""
    source = context.extra.get("input")
    if source is None:
        raise ConfigurationError(f"{job.command} needs --input")
    spec = parse_network_spec(source, context.extra.get("degree"), job.config)
    channels = 1 if spec.kind == "cascade" else spec.m
    values = context.extra.get("v")
    if values is None:
        values = [0.0] * channels
    if len(values) != channels:
        raise ConfigurationError("--v needs one value per input channel",
                                 context={"expected": channels, "got": len(values)})
    steps = context.extra.get("steps")
    steps = job.config.SIM_STEPS if steps is None else steps
    T = context.extra.get("T")
    return spec, ConstantInput(tuple(values), 1.0 if T is None else T, steps)


class SimulateJob(BaseJob):
    command = "simulate"

    def extract(self, context: JobContext) -> Tuple[NetworkSpec, ConstantInput]:
        return read_numeric_inputs(self, context)

    def transform(self, data: Tuple[NetworkSpec, ConstantInput], context: JobContext) -> pd.DataFrame:
        spec, v = data
        degree = max(spec.degree, 1)
        return simulate_network(spec, v, degree).to_frame()


__all__ = ["SimulateJob", "read_numeric_inputs"]
