"""Galois groups of trinomials over function fields: exact classification,
finite-field factorization evidence, and the group/polygon machinery behind it."""

__version__ = "0.1.0"
