"""Refined coinvariant algebras: descent monomials, multiplicities and exact oracles."""

__version__ = "0.1.0"
