"""Galois points of plane curves and the de Jonquieres maps that extend them."""

__version__ = "0.1.0"
