"""
Utilitários compartilhados entre os comandos do cfnet.

Este pacote centraliza a execução padronizada dos jobs e as convenções de
nomenclatura das tabelas emitidas.
"""

__all__ = ["naming_conventions", "job_base"]
