"""
Camada base para execução padronizada dos comandos do cfnet.

Fornece a classe abstrata que encapsula o fluxo padrão (extract → transform →
validate → load) e padroniza logging, validação das colunas e renderização
das tabelas em text/csv/json.
"""

from __future__ import annotations

import json
import logging
import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, TextIO

import pandas as pd

from src.core.core import OUTPUT_FORMATS, Config, __version__, log_execution
from src.core.exceptions import ConfigurationError, InvariantViolationError, handle_job_errors
from src.utils.naming_conventions import NamingConventions


@dataclass
class JobContext:
    """Parâmetros de execução de um comando."""

    output_format: str = "text"
    stream: TextIO = field(default_factory=lambda: sys.stdout)
    extra: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError("output format must be one of text, csv, json",
                                     context={"value": self.output_format})


def render_table(table: pd.DataFrame, output_format: str, stream: TextIO, command: str) -> None:
    """Escreve a tabela; a primeira linha de text/csv é o cabeçalho de versão."""
    if output_format == "json":
        payload = {
            "version": __version__,
            "command": command,
            "rows": json.loads(table.to_json(orient="records", double_precision=15)),
        }
        stream.write(json.dumps(payload, ensure_ascii=False, indent=2))
        stream.write("\n")
        return
    stream.write(f"# cfnet {__version__}\n")
    if output_format == "csv":
        table.to_csv(stream, index=False, lineterminator="\n")
    elif table.empty:
        stream.write("(sem linhas)\n")
    else:
        stream.write(table.to_string(index=False))
        stream.write("\n")


class BaseJob(ABC):
    """
    Classe abstrata que encapsula o ciclo de vida padrão de um comando.

    Subclasses devem implementar obrigatoriamente os métodos ``extract`` e
    ``transform``. Os métodos ``validate`` e ``load`` possuem comportamento
    padrão que pode ser sobrescrito conforme necessário.
    """

    command: str = "generic"

    def __init__(self, *, name: Optional[str] = None, config: Optional[Config] = None) -> None:
        self.name = name or self.__class__.__name__
        self.config = config or Config()
        self.logger = logging.getLogger(self.name)

    # ------------------------------------------------------------------ #
    # Métodos que as subclasses devem (ou podem) sobrescrever
    # ------------------------------------------------------------------ #

    @abstractmethod
    def extract(self, context: JobContext) -> Any:
        """Lê as entradas do comando."""

    @abstractmethod
    def transform(self, data: Any, context: JobContext) -> pd.DataFrame:
        """Executa o cálculo e devolve a tabela de saída."""

    def validate(self, table: pd.DataFrame, context: JobContext) -> pd.DataFrame:
        """Confere as colunas padrão do comando."""
        kind = self.table_kind(context)
        missing = NamingConventions.missing_columns(table, kind, self.output_count(table))
        if missing:
            raise InvariantViolationError(
                f"{kind} table lacks columns",
                context={"missing": ",".join(missing)},
            )
        return table

    def load(self, table: pd.DataFrame, context: JobContext) -> None:
        """Renderização padrão no stream do contexto."""
        render_table(self.present(table, context), context.output_format, context.stream, self.command)

    def table_kind(self, context: JobContext) -> str:
        return self.command

    def present(self, table: pd.DataFrame, context: JobContext) -> pd.DataFrame:
        """Ajustes de apresentação por formato (padrão: nenhum)."""
        return table

    @staticmethod
    def output_count(table: pd.DataFrame) -> int:
        return sum(1 for c in table.columns if str(c).startswith("y_"))

    # ------------------------------------------------------------------ #
    # Fluxo principal
    # ------------------------------------------------------------------ #

    @log_execution
    def run(self, *, output_format: Optional[str] = None, stream: Optional[TextIO] = None,
            render: bool = True, **extra: Any) -> pd.DataFrame:
        """
        Executa o comando completo.

        Args:
            output_format: text, csv ou json (padrão: CFNET_OUTPUT_FORMAT).
            stream: destino da tabela (padrão: stdout).
            render: se falso, apenas devolve a tabela.
            extra: parâmetros específicos do comando.
        """
        context = JobContext(
            output_format=output_format or self.config.OUTPUT_FORMAT,
            stream=stream or sys.stdout,
            extra=extra,
        )
        self.logger.info("Iniciando comando %s", self.command)
        table = self._execute(context)
        if render:
            self.load(table, context)
        self.logger.info("Comando %s finalizado com %s linha(s).", self.command, len(table))
        return table

    @handle_job_errors
    def _execute(self, context: JobContext) -> pd.DataFrame:
        data = self.extract(context)
        table = self.transform(data, context)
        return self.validate(table, context)


__all__ = ["BaseJob", "JobContext", "render_table"]
