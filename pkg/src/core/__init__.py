"""
Core Package - Funcionalidades essenciais do cfnet
Configuração, logging, coeficientes e exceções
"""

from .core import (
    # Configuração
    Config,
    OUTPUT_FORMATS,
    __version__,

    # Decorators e logging
    log_execution,
    logger,
    configure_logging,

    # Coeficientes
    to_coefficient,
    parse_coefficient,
    format_coefficient,
)

__author__ = "cfnet Team"

__all__ = [
    'Config', 'OUTPUT_FORMATS', '__version__',
    'log_execution', 'logger', 'configure_logging',
    'to_coefficient', 'parse_coefficient', 'format_coefficient',
]
