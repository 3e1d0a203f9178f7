"""Reduction types of CM abelian varieties via circular words and Galois groups."""

__version__ = "0.1.0"
