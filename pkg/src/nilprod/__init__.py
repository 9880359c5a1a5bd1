"""Cosmash products, commutators and bilinear products in concrete algebraic categories."""

__version__ = "0.1.0"
