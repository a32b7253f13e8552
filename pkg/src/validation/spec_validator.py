#!/usr/bin/env python3
"""
Sistema de Validação de Documentos de Rede
==========================================
Valida a estrutura dos documentos JSON de especificação de redes antes da
montagem das séries. Cada regra aponta para um caminho do documento
(ex.: ``nodes[1].series.terms[0].word``) e as mensagens de falha são
qualificadas por esse caminho.

Data: 2026-10-17
Versão: 1.0
"""

import logging
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

NETWORK_KINDS = ("additive", "multiplicative", "cascade")
BUILTIN_SERIES = ("factorial_geometric", "polynomial")

_MISSING = object()
_TOKEN = re.compile(r"([^.\[\]]+)|\[(\d+)\]")


@dataclass
class ValidationRule:
    """Regra de validação"""
    name: str
    path: str
    rule_type: str
    parameters: Dict[str, Any]
    severity: str = 'ERROR'  # ERROR, WARNING, INFO
    description: str = ''


@dataclass
class ValidationResult:
    """Resultado de validação"""
    rule_name: str
    path: str
    passed: bool
    message: str
    severity: str


def resolve_path(document: Any, path: str) -> Any:
    """Valor em ``path`` (ex.: 'M[0][1]'); ``_MISSING`` quando ausente."""
    current = document
    for key, index in _TOKEN.findall(path):
        if key:
            if not isinstance(current, dict) or key not in current:
                return _MISSING
            current = current[key]
        else:
            i = int(index)
            if not isinstance(current, list) or i >= len(current):
                return _MISSING
            current = current[i]
    return current


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class DocumentValidator:
    """Validador de documentos estruturados (dict/list vindos de JSON)"""

    TYPES: Dict[str, Tuple[type, ...]] = {
        'int': (int,),
        'str': (str,),
        'list': (list,),
        'dict': (dict,),
        # coeficiente: string racional "p/q" ou inteiro JSON; floats e booleanos são rejeitados
        'coefficient': (str, int),
    }

    def __init__(self):
        self.rules: List[ValidationRule] = []
        self.logger = logging.getLogger(__name__)

    def add_rule(self, name: str, path: str, rule_type: str,
                 parameters: Optional[Dict[str, Any]] = None, severity: str = 'ERROR',
                 description: str = '') -> 'DocumentValidator':
        """Adiciona regra de validação"""
        self.rules.append(ValidationRule(
            name=name,
            path=path,
            rule_type=rule_type,
            parameters=parameters or {},
            severity=severity,
            description=description,
        ))
        return self

    def validate(self, document: Any) -> List[ValidationResult]:
        """Valida o documento contra todas as regras"""
        results = []
        for rule in self.rules:
            try:
                results.append(self._validate_rule(document, rule))
            except Exception as e:
                self.logger.error(f"Erro ao aplicar a regra {rule.name}: {e}")
                results.append(self._result(rule, False, f"{rule.path}: validation error: {e}", 'ERROR'))
        return results

    # ------------------------------------------------------------------ #
    # Regras
    # ------------------------------------------------------------------ #

    @staticmethod
    def _result(rule: ValidationRule, passed: bool, message: str,
                severity: Optional[str] = None) -> ValidationResult:
        return ValidationResult(
            rule_name=rule.name,
            path=rule.path,
            passed=passed,
            message=message,
            severity=severity or rule.severity,
        )

    def _validate_rule(self, document: Any, rule: ValidationRule) -> ValidationResult:
        value = resolve_path(document, rule.path)

        if rule.rule_type == 'required':
            return self._result(rule, value is not _MISSING, f"{rule.path}: required field missing")

        # Campos opcionais ausentes não reprovam as demais regras
        if value is _MISSING:
            return self._result(rule, True, f"{rule.path}: absent")

        if rule.rule_type == 'type':
            return self._validate_type(value, rule)
        elif rule.rule_type == 'values':
            allowed = rule.parameters.get('values', ())
            return self._result(rule, value in allowed,
                                f"{rule.path}: expected one of {', '.join(map(str, allowed))}, got {value!r}")
        elif rule.rule_type == 'range':
            return self._validate_range(value, rule)
        elif rule.rule_type == 'length':
            return self._validate_length(value, rule)
        elif rule.rule_type == 'matrix':
            return self._validate_matrix(value, rule)
        else:
            return self._result(rule, False, f"{rule.path}: unknown rule type {rule.rule_type}", 'ERROR')

    def _validate_type(self, value: Any, rule: ValidationRule) -> ValidationResult:
        expected = rule.parameters.get('type', 'str')
        types = self.TYPES[expected]
        passed = isinstance(value, types) and not isinstance(value, bool)
        return self._result(rule, passed, f"{rule.path}: expected {expected}, got {type(value).__name__}")

    def _validate_range(self, value: Any, rule: ValidationRule) -> ValidationResult:
        min_val = rule.parameters.get('min')
        max_val = rule.parameters.get('max')
        if not _is_int(value):
            return self._result(rule, False, f"{rule.path}: expected an integer for range check")
        passed = (min_val is None or value >= min_val) and (max_val is None or value <= max_val)
        range_str = (f"[{min_val}, {max_val}]" if min_val is not None and max_val is not None
                     else f">= {min_val}" if min_val is not None else f"<= {max_val}")
        return self._result(rule, passed, f"{rule.path}: value {value} outside {range_str}")

    def _validate_length(self, value: Any, rule: ValidationRule) -> ValidationResult:
        if not hasattr(value, '__len__'):
            return self._result(rule, False, f"{rule.path}: value has no length")
        exact = rule.parameters.get('exact')
        min_len = rule.parameters.get('min')
        if exact is not None:
            return self._result(rule, len(value) == exact,
                                f"{rule.path}: expected length {exact}, got {len(value)}")
        return self._result(rule, min_len is None or len(value) >= min_len,
                            f"{rule.path}: expected length >= {min_len}, got {len(value)}")

    def _validate_matrix(self, value: Any, rule: ValidationRule) -> ValidationResult:
        """Matriz quadrada size x size de coeficientes (str ou int)"""
        size = rule.parameters.get('size')
        if not isinstance(value, list) or len(value) != size:
            return self._result(rule, False, f"{rule.path}: expected {size} rows")
        for i, row in enumerate(value):
            if not isinstance(row, list) or len(row) != size:
                return self._result(rule, False, f"{rule.path}[{i}]: expected {size} entries")
            for j, entry in enumerate(row):
                if isinstance(entry, bool) or not isinstance(entry, (str, int)):
                    return self._result(rule, False,
                                        f"{rule.path}[{i}][{j}]: expected coefficient string")
        return self._result(rule, True, f"{rule.path}: ok")


class NetworkDocumentValidator(DocumentValidator):
    """
    Regras padrão do esquema JSON de redes.

    Coeficientes (``coeff`` dos termos e entradas de ``M``) são strings racionais
    como "-3/4"; inteiros JSON também são aceitos e lidos como racionais exatos.
    Floats são rejeitados para manter a aritmética exata.
    """

    def __init__(self):
        super().__init__()
        self.add_rule('m_required', 'm', 'required')
        self.add_rule('m_type', 'm', 'type', {'type': 'int'})
        self.add_rule('m_range', 'm', 'range', {'min': 1})
        self.add_rule('kind_required', 'kind', 'required')
        self.add_rule('kind_values', 'kind', 'values', {'values': NETWORK_KINDS})
        self.add_rule('degree_type', 'degree', 'type', {'type': 'int'})
        self.add_rule('degree_range', 'degree', 'range', {'min': 0})
        self.add_rule('nodes_required', 'nodes', 'required')
        self.add_rule('nodes_type', 'nodes', 'type', {'type': 'list'})

    def validate(self, document: Any) -> List[ValidationResult]:
        if not isinstance(document, dict):
            rule = ValidationRule('document_type', '$', 'type', {'type': 'dict'})
            return [self._result(rule, False, "$: network document must be a JSON object")]

        results = super().validate(document)
        if any(not r.passed and r.severity == 'ERROR' for r in results):
            return results

        # Regras que dependem de m, kind e do número de nós
        m = document['m']
        kind = document['kind']
        nodes = document['nodes']
        dependent = DocumentValidator()
        if kind == 'cascade':
            dependent.add_rule('cascade_nodes', 'nodes', 'length', {'exact': 2},
                               description='cascade = (outer, inner)')
            dependent.add_rule('cascade_m', 'm', 'values', {'values': (2,)})
        else:
            dependent.add_rule('nodes_count', 'nodes', 'length', {'exact': m})
            dependent.add_rule('M_required', 'M', 'required')
            dependent.add_rule('M_matrix', 'M', 'matrix', {'size': m})
        for i, node in enumerate(nodes):
            self._add_node_rules(dependent, i, node)
        return results + dependent.validate(document)

    @staticmethod
    def _add_node_rules(validator: DocumentValidator, i: int, node: Any) -> None:
        base = f"nodes[{i}]"
        validator.add_rule(f'node_{i}_type', base, 'type', {'type': 'dict'})
        validator.add_rule(f'node_{i}_series', f"{base}.series", 'required')
        validator.add_rule(f'node_{i}_series_type', f"{base}.series", 'type', {'type': 'dict'})
        series = node.get('series') if isinstance(node, dict) else None
        if not isinstance(series, dict):
            return
        builtin = series.get('builtin')
        if builtin is not None:
            validator.add_rule(f'node_{i}_builtin', f"{base}.series.builtin", 'values',
                               {'values': BUILTIN_SERIES})
        if builtin == 'factorial_geometric':
            validator.add_rule(f'node_{i}_letter', f"{base}.series.letter", 'required')
            validator.add_rule(f'node_{i}_letter_type', f"{base}.series.letter", 'type', {'type': 'int'})
            validator.add_rule(f'node_{i}_letter_range', f"{base}.series.letter", 'range', {'min': 0})
            return
        validator.add_rule(f'node_{i}_terms', f"{base}.series.terms", 'required')
        validator.add_rule(f'node_{i}_terms_type', f"{base}.series.terms", 'type', {'type': 'list'})
        terms = series.get('terms')
        if not isinstance(terms, list):
            return
        for t, _ in enumerate(terms):
            term = f"{base}.series.terms[{t}]"
            validator.add_rule(f'node_{i}_term_{t}_word', f"{term}.word", 'required')
            validator.add_rule(f'node_{i}_term_{t}_word_type', f"{term}.word", 'type', {'type': 'str'})
            validator.add_rule(f'node_{i}_term_{t}_coeff', f"{term}.coeff", 'required')
            validator.add_rule(f'node_{i}_term_{t}_coeff_type', f"{term}.coeff", 'type',
                               {'type': 'coefficient'})


def get_validation_summary(results: List[ValidationResult]) -> Dict[str, Any]:
    """Gera resumo das validações"""
    total_rules = len(results)
    passed_rules = sum(1 for r in results if r.passed)
    failed = [r for r in results if not r.passed]

    return {
        'total_rules': total_rules,
        'passed_rules': passed_rules,
        'failed_rules': len(failed),
        'error_count': sum(1 for r in failed if r.severity == 'ERROR'),
        'warning_count': sum(1 for r in failed if r.severity == 'WARNING'),
        'info_count': sum(1 for r in failed if r.severity == 'INFO'),
        'success_rate': (passed_rules / total_rules * 100) if total_rules > 0 else 0,
        'failed_paths': [r.path for r in failed],
    }


__all__ = [
    'ValidationRule',
    'ValidationResult',
    'DocumentValidator',
    'NetworkDocumentValidator',
    'get_validation_summary',
    'resolve_path',
    'NETWORK_KINDS',
    'BUILTIN_SERIES',
]
