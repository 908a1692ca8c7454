"""Computable categorical Galois theory for finite monoids and semirings."""

__version__ = "0.1.0"
