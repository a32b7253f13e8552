"""
Verificação numérica (entradas constantes, integração RK4).
"""

__all__ = ["numeric"]
