"""
Álgebra de séries formais não comutativas: palavras, séries truncadas,
polinômios de Lie e funcionais tensoriais.
"""

__all__ = ["words", "series", "lie", "tensor", "sampling"]
