"""Congruences of lines in P^5, their focal loci, and certificate checks."""

__version__ = "0.1.0"
