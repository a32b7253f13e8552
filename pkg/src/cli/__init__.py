"""
Interface de linha de comando do cfnet.
"""
