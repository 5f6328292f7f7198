"""Exact computation of invariant polynomials on simple Lie superalgebras."""

__version__ = "0.1.0"
