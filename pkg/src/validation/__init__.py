"""
Módulo de Validação
===================
Validação estrutural dos documentos de especificação de redes.
"""

from .spec_validator import (
    DocumentValidator,
    NetworkDocumentValidator,
    ValidationRule,
    ValidationResult,
    get_validation_summary,
    resolve_path,
)

__all__ = [
    'DocumentValidator',
    'NetworkDocumentValidator',
    'ValidationRule',
    'ValidationResult',
    'get_validation_summary',
    'resolve_path',
]
