"""
Redes de séries de Chen-Fliess: especificação, construtores de
representações e oráculo de composição.
"""

__all__ = ["network_spec", "builders", "composition"]
