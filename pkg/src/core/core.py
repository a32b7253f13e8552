"""
Core Utils - Funcionalidades essenciais consolidadas do cfnet
Séries geradoras de redes de séries de Chen-Fliess
Versão - 17/10/2026
"""

import os
import logging
import time
import functools
from fractions import Fraction
from typing import Any, Optional, Union

from dotenv import load_dotenv

from src.core.exceptions import ConfigurationError, ParseError

# Carregar variáveis de ambiente
load_dotenv()

__version__ = "1.0.0"

# =================================================================
# CONFIGURAÇÕES CENTRALIZADAS
# =================================================================

OUTPUT_FORMATS = ("text", "csv", "json")


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer", context={"value": raw})
    if value < minimum:
        raise ConfigurationError(f"{name} must be >= {minimum}", context={"value": value})
    return value


class Config:
    """Configurações centralizadas (variáveis de ambiente / .env)"""

    def __init__(self) -> None:
        self.DEFAULT_DEGREE = _env_int("CFNET_DEFAULT_DEGREE", 4)
        self.SIM_STEPS = _env_int("CFNET_SIM_STEPS", 1000, minimum=1)
        self.LOG_LEVEL = os.getenv("CFNET_LOG_LEVEL", "INFO").upper()
        self.LOG_FILE = os.getenv("CFNET_LOG_FILE") or None
        self.OUTPUT_FORMAT = os.getenv("CFNET_OUTPUT_FORMAT", "text").lower()
        if self.OUTPUT_FORMAT not in OUTPUT_FORMATS:
            raise ConfigurationError(
                "CFNET_OUTPUT_FORMAT must be one of text, csv, json",
                context={"value": self.OUTPUT_FORMAT},
            )

    @property
    def LOG_FORMAT(self) -> str:
        return "[%(asctime)s] [%(levelname)s] %(name)s - %(message)s"


# =================================================================
# LOGGING E DECORATORS
# =================================================================

logger = logging.getLogger("cfnet")


def configure_logging(config: Optional[Config] = None) -> None:
    """Garante configuração única do logging (stderr + arquivo opcional)."""
    root = logging.getLogger()
    if root.handlers:
        return
    config = config or Config()
    handlers: list = [logging.StreamHandler()]
    if config.LOG_FILE:
        handlers.append(logging.FileHandler(config.LOG_FILE, encoding="utf-8"))
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.INFO),
        format=config.LOG_FORMAT,
        handlers=handlers,
    )


def log_execution(func):
    """Decorator para logging de execução"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.time()
        logger.debug(f"Iniciando: {func.__name__}")
        try:
            result = func(*args, **kwargs)
            elapsed = time.time() - start_time
            logger.info(f"{func.__name__} concluída em {elapsed:.2f}s")
            return result
        except Exception as e:
            elapsed = time.time() - start_time
            logger.error(f"{func.__name__} falhou após {elapsed:.2f}s: {e}")
            raise
    return wrapper


# =================================================================
# COEFICIENTES RACIONAIS
# =================================================================

Number = Union[int, Fraction, float, str]


def to_coefficient(value: Any) -> Fraction:
    """Converte valor para racional exato (floats pela sua expansão binária)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError("boolean is not a coefficient", context={"value": value})
    if isinstance(value, (int, float)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_coefficient(value)
    try:
        return Fraction(value)
    except (TypeError, ValueError):
        raise ParseError("unsupported coefficient value", context={"value": repr(value)})


def parse_coefficient(text: str) -> Fraction:
    """Lê coeficiente no formato '[sinal]inteiro' ou '[sinal]p/q'."""
    raw = (text or "").strip()
    if not raw:
        raise ParseError("empty coefficient")
    body = raw[1:] if raw[0] in "+-" else raw
    parts = body.split("/")
    if len(parts) > 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"invalid coefficient '{text}'")
    if len(parts) == 2 and int(parts[1]) == 0:
        raise ParseError(f"zero denominator in coefficient '{text}'")
    return Fraction(raw)


def format_coefficient(value: Fraction) -> str:
    """Formata racional como 'p/q' (ou inteiro quando q=1)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# =================================================================
# EXPORTAÇÕES
# =================================================================

__all__ = [
    'Config', 'OUTPUT_FORMATS', '__version__',
    'log_execution', 'logger', 'configure_logging',
    'Number', 'to_coefficient', 'parse_coefficient', 'format_coefficient',
]
