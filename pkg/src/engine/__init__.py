"""
Motor de representações formais: campos de estado, derivada de Lie formal e
extração de coeficientes.
"""

__all__ = ["representation"]
