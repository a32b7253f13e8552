#!/usr/bin/env python3
"""
Sistema de Exceções Personalizadas
==================================
Define exceções específicas do cfnet (álgebra, motor de representações,
redes, simulação e CLI).

Data: 2026-10-17
Versão: 1.0
"""

from typing import Optional, Dict, Any, List
import functools
import logging


class CFNetError(Exception):
    """Exceção base do cfnet"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        self.message = message
        self.context = context or {}
        super().__init__(self.message)

    def __str__(self):
        if self.context:
            context_str = ", ".join([f"{k}={v}" for k, v in self.context.items()])
            return f"{self.message} (Context: {context_str})"
        return self.message


class ParseError(CFNetError, ValueError):
    """Erro de sintaxe em palavra, token ou coeficiente"""
    pass


class AlphabetMismatchError(CFNetError, ValueError):
    """Operandos sobre alfabetos distintos ou letra estrangeira"""
    pass


class DimensionMismatchError(CFNetError, ValueError):
    """Número de slots, forma de matriz ou número de nós incompatível"""
    pass


class EngineError(CFNetError, ValueError):
    """Pré-condição violada na álgebra ou no motor de representações"""
    pass


class SpecValidationError(CFNetError):
    """Documento de rede reprovado na validação"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None,
                 results: Optional[List[Any]] = None):
        super().__init__(message, context)
        self.results = results or []

    def __str__(self):
        failed = [r.message for r in self.results if not r.passed and r.severity == 'ERROR']
        if failed:
            return f"{self.message}: " + "; ".join(failed)
        return super().__str__()


class ConfigurationError(CFNetError):
    """Erro de configuração"""
    pass


class SimulationError(CFNetError):
    """Erro na simulação numérica (NaN / divergência)"""
    pass


class InvariantViolationError(CFNetError):
    """Invariante interno violado"""
    pass


# =================================================================
# DECORATORS PARA TRATAMENTO DE ERROS
# =================================================================

VALIDATION_ERRORS = (
    ParseError,
    AlphabetMismatchError,
    DimensionMismatchError,
    EngineError,
    SpecValidationError,
    ConfigurationError,
    SimulationError,
)


def handle_job_errors(func):
    """Decorator para tratamento de erros nas etapas dos jobs"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (CFNetError, OSError):
            raise
        except Exception as e:
            logger = logging.getLogger(func.__module__)
            logger.error(f"Job error in {func.__name__}: {str(e)}")
            raise InvariantViolationError(
                f"Job stage failed in {func.__name__}",
                context={'function': func.__name__, 'error': str(e)}
            ) from e
    return wrapper


# =================================================================
# FUNÇÕES UTILITÁRIAS
# =================================================================

def exit_code_for(error: BaseException) -> int:
    """Código de saída da CLI: 1 validação/entrada, 2 invariante interno"""
    if isinstance(error, VALIDATION_ERRORS) or isinstance(error, OSError):
        return 1
    return 2


def get_error_context(error: Exception) -> Dict[str, Any]:
    """Extrai contexto de um erro"""
    if isinstance(error, CFNetError):
        return error.context
    return {'error_type': type(error).__name__, 'message': str(error)}


def log_error_with_context(error: Exception, logger: logging.Logger,
                           additional_context: Optional[Dict[str, Any]] = None):
    """Loga erro com contexto completo"""
    context = dict(get_error_context(error))
    if additional_context:
        context.update(additional_context)

    logger.error(
        f"Error: {str(error)}",
        extra={'error_context': context}
    )


# =================================================================
# EXPORTAÇÕES
# =================================================================

__all__ = [
    'CFNetError',
    'ParseError',
    'AlphabetMismatchError',
    'DimensionMismatchError',
    'EngineError',
    'SpecValidationError',
    'ConfigurationError',
    'SimulationError',
    'InvariantViolationError',
    'VALIDATION_ERRORS',
    'handle_job_errors',
    'exit_code_for',
    'get_error_context',
    'log_error_with_context'
]
